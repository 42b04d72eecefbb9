"""Named example algebras and structures used by tests, fixtures, and the CLI."""

from __future__ import annotations

from .action import CyclicAction, Grading, ModuleStructure, make_grading, validate_action, validate_automorphism, validate_grading
from .exactmat import ONE, ZERO, Matrix
from .groups import cyclic_group, free_abelian, symmetric_group3
from .hopf import group_algebra, sweedler4
from .liealg import LieAlgebra, direct_sum, from_brackets, from_matrices


def E(i: int, j: int, n: int) -> Matrix:
    """Matrix unit with a 1 in row i, column j (0-based)."""
    rows = [[ZERO] * n for _ in range(n)]
    rows[i][j] = ONE
    return Matrix(rows, n)


def sl2() -> LieAlgebra:
    """Basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return from_brackets(3, {(0, 2): {1: 1}, (1, 0): {0: 2}, (1, 2): {2: -2}}, ["e", "h", "f"])


def gl2() -> LieAlgebra:
    return from_matrices([E(0, 0, 2), E(0, 1, 2), E(1, 0, 2), E(1, 1, 2)], ["E11", "E12", "E21", "E22"])


def l_aff() -> LieAlgebra:
    """Two-dimensional non-abelian algebra: [e1, e2] = e2."""
    return from_brackets(2, {(0, 1): {1: 1}}, ["e1", "e2"])


def heisenberg() -> LieAlgebra:
    return from_brackets(3, {(0, 1): {2: 1}}, ["x", "y", "z"])


def l7() -> LieAlgebra:
    """sl2 + span{t} + F^2 inside gl3; t acts as the identity on F^2."""
    n = 3
    mats = [E(0, 1, n), E(0, 0, n) - E(1, 1, n), E(1, 0, n), -E(2, 2, n), E(0, 2, n), E(1, 2, n)]
    return from_matrices(mats, ["e", "h", "f", "t", "v1", "v2"])


def sl2_natural() -> LieAlgebra:
    """sl2 acting on F^2 (semidirect sum, dimension 5)."""
    n = 3
    mats = [E(0, 1, n), E(0, 0, n) - E(1, 1, n), E(1, 0, n), E(0, 2, n), E(1, 2, n)]
    return from_matrices(mats, ["e", "h", "f", "v1", "v2"])


def _sl2_pair_matrices(sign: int):
    """diag(X, sign*X) for X = e, h, f in gl4."""
    n = 4
    e = E(0, 1, n) + E(2, 3, n) * sign
    h = E(0, 0, n) - E(1, 1, n) + (E(2, 2, n) - E(3, 3, n)) * sign
    f = E(1, 0, n) + E(3, 2, n) * sign
    return [e, h, f]


def sl2_sum() -> LieAlgebra:
    """sl2 + sl2 in the block basis (first copy, then second copy)."""
    return direct_sum(sl2(), sl2())


def sl2_swap_graded() -> tuple[LieAlgebra, Grading]:
    """sl2 + sl2 in the basis diag(X, X), diag(X, -X) with its Z2 grading."""
    mats = _sl2_pair_matrices(1) + _sl2_pair_matrices(-1)
    L = from_matrices(mats, ["e+", "h+", "f+", "e-", "h-", "f-"])
    g = make_grading(cyclic_group(2), [0, 0, 0, 1, 1, 1])
    return L, validate_grading(L, g)


def swap_automorphism() -> tuple[LieAlgebra, CyclicAction]:
    """sl2 + sl2 with the automorphism exchanging the two factors."""
    L = sl2_sum()
    cols = [[ZERO] * 6 for _ in range(6)]
    for i in range(3):
        cols[i][i + 3] = ONE
        cols[i + 3][i] = ONE
    return L, validate_automorphism(L, CyclicAction(Matrix.from_columns(cols, 6)))


def s3_block() -> tuple[LieAlgebra, Grading]:
    """gl2 + gl2 (block diagonal in gl4) graded by S3.

    Diagonal units have degree e, the off-diagonal units of the first block
    degree (12), those of the second block degree (23).
    """
    n = 4
    mats = [E(0, 0, n), E(1, 1, n), E(2, 2, n), E(3, 3, n),
            E(0, 1, n), E(1, 0, n), E(2, 3, n), E(3, 2, n)]
    labels = ["E11", "E22", "E33", "E44", "E12", "E21", "E34", "E43"]
    L = from_matrices(mats, labels)
    g = make_grading(symmetric_group3(), ["e", "e", "e", "e", "(12)", "(12)", "(23)", "(23)"])
    return L, validate_grading(L, g)


def l6() -> LieAlgebra:
    """sl2 + V with V a copy of the adjoint module, [V, V] = 0.

    Basis (e, h, f, pe, ph, pf) where p marks the copy in V.
    """
    base = sl2()
    br = {}
    for i in range(3):
        for j in range(3):
            for k, c in enumerate(base.c[i][j]):
                if c and i < j:
                    br.setdefault((i, j), {})[k] = c
                if c:
                    br.setdefault((i, j + 3), {})[k + 3] = c
    return from_brackets(6, br, ["e", "h", "f", "pe", "ph", "pf"])


def _l6_maps():
    n = 6
    g = Matrix.diag([1, 1, 1, -1, -1, -1])
    x = Matrix([[ONE if (r < 3 and c == r + 3) else ZERO for c in range(n)] for r in range(n)], n)
    return g, x


def l6_sweedler() -> tuple[LieAlgebra, ModuleStructure]:
    """L6 with Sweedler's algebra acting: g(a + pb) = a - pb, x(a + pb) = b."""
    L = l6()
    H = sweedler4()
    g, x = _l6_maps()
    act = ModuleStructure(H, [Matrix.identity(6), g, x, g @ x])
    return L, validate_action(L, act)


def l6_z2() -> tuple[LieAlgebra, ModuleStructure]:
    """L6 with the group algebra of Z2 acting through g(a + pb) = a - pb."""
    L = l6()
    H, _ = group_algebra(cyclic_group(2))
    g, _ = _l6_maps()
    return L, validate_action(L, ModuleStructure(H, [Matrix.identity(6), g]))


def block_automorphism(m: int = 2) -> tuple[LieAlgebra, CyclicAction]:
    """Block matrices [[C, D], [0, 0]] with C traceless, and phi(C, D) = (C, C + D)."""
    n = 2 * m
    mats = []
    labels = []
    for i in range(m):
        for j in range(m):
            if i != j:
                mats.append(E(i, j, n))
                labels.append(f"C{i + 1}{j + 1}")
    for i in range(m - 1):
        mats.append(E(i, i, n) - E(i + 1, i + 1, n))
        labels.append(f"H{i + 1}")
    c_count = len(mats)
    for i in range(m):
        for j in range(m):
            mats.append(E(i, m + j, n))
            labels.append(f"D{i + 1}{j + 1}")
    L = from_matrices(mats, labels)
    # phi moves C into the D block as well: (C, 0) -> (C, C)
    shift = {}
    for i in range(m):
        for j in range(m):
            shift[(i, j)] = c_count + i * m + j
    cols = []
    for idx in range(L.dim):
        col = [ZERO] * L.dim
        col[idx] = ONE
        if idx < c_count:
            M = mats[idx]
            for i in range(m):
                for j in range(m):
                    if M[i, j]:
                        col[shift[(i, j)]] += M[i, j]
        cols.append(col)
    phi = Matrix.from_columns(cols, L.dim)
    return L, validate_automorphism(L, CyclicAction(phi))


def l_aff_graded(deg_e1: int = 0, deg_e2: int = 1) -> tuple[LieAlgebra, Grading]:
    """L_aff graded by Z (the grading is not validated here)."""
    return l_aff(), make_grading(free_abelian(1), [deg_e1, deg_e2])


ALGEBRAS = {
    "sl2": sl2,
    "gl2": gl2,
    "l_aff": l_aff,
    "heisenberg": heisenberg,
    "l7": l7,
    "sl2_natural": sl2_natural,
    "sl2_sum": sl2_sum,
    "l6": l6,
}
