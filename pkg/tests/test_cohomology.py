import random

import pytest

from randgen import colinear_cocycle_basis, graded_semisimple_cases, random_combination, random_matrix
from levikit import catalog
from levikit.action import make_grading
from levikit.cohomology import (
    Cochain,
    bracket_cochain,
    coboundary,
    coboundary0,
    coboundary1,
    coboundary2,
    is_colinear_cochain,
    solve_coboundary,
)
from levikit.construct import random_instance
from levikit.errors import IntegralUnavailable, NotACocycle, NotSemisimple, SymmetryRequired
from levikit.exactmat import Matrix
from levikit.groups import free_abelian, symmetric_group3


def test_cochain_signs():
    c = Cochain.from_function(3, 1, 2, lambda i, j: (10 * i + j,))
    assert c.value(0, 1) == (1,)
    assert c.value(1, 0) == (-1,)
    assert c.value(1, 1) == (0,)
    assert c.evaluate((1, 0, 0), (0, 2, 0)) == (2,)
    assert c.evaluate((0, 2, 0), (1, 0, 0)) == (-2,)


def _reps():
    out = [("sl2 adjoint", catalog.sl2(), catalog.sl2().ad_basis)]
    for name in ("l7", "heisenberg", "gl2", "l6"):
        L = catalog.ALGEBRAS[name]()
        out.append((name, L, L.ad_basis))
    for seed in range(6):
        L = random_instance(seed).algebra
        out.append((f"random {seed}", L, L.ad_basis))
    return out


@pytest.mark.parametrize("name,L,psi", _reps(), ids=lambda x: x if isinstance(x, str) else "")
def test_d_squared_vanishes(name, L, psi):
    rng = random.Random(hash(name) % 1000)
    n, dv = L.dim, psi[0].nrows
    for _ in range(3):
        v = tuple(rng.randint(-3, 3) for _ in range(dv))
        assert coboundary1(L, psi, coboundary0(L, psi, v)).is_zero()
        omega = random_matrix(rng, dv, n)
        assert coboundary2(L, psi, coboundary1(L, psi, omega)).is_zero()
    # the bracket itself is an adjoint 2-cocycle exactly when Jacobi holds
    assert coboundary(L, L.ad_basis, bracket_cochain(L)).is_zero()


def test_hand_computed_coboundary():
    # sl2 acting trivially on Q: (d omega)(e, f) = -omega(h)
    L = catalog.sl2()
    psi = [Matrix([[0]]) for _ in range(3)]
    d = coboundary1(L, psi, Matrix([[0, 5, 0]]))
    assert d.value(0, 2) == (-5,)
    assert d.value(0, 1) == (0,)
    assert d.value(1, 2) == (0,)


@pytest.mark.parametrize("case", graded_semisimple_cases(), ids=lambda c: c[0])
def test_colinear_solving(case):
    name, L, psi, sL, sV, t = case
    basis = colinear_cocycle_basis(L, psi, sL, sV)
    assert basis, "expected nonzero colinear cocycles"
    rng = random.Random(len(name))
    for _ in range(2):
        phi = random_combination(rng, basis)
        assert is_colinear_cochain(L, phi, sL, sV)
        omega = solve_coboundary(L, psi, phi, colinear=True, struct_L=sL, struct_V=sV, t=t)
        assert coboundary1(L, psi, omega) == phi
        assert is_colinear_cochain(L, omega, sL, sV)


def test_solver_hypotheses():
    L = catalog.sl2()
    phi = Cochain.from_function(3, 3, 2, lambda i, j: (1, 0, 0) if (i, j) == (0, 1) else (0, 0, 0))
    with pytest.raises(NotACocycle):
        solve_coboundary(L, L.ad_basis, phi)
    La = catalog.l_aff()
    g = make_grading(free_abelian(1), [0, 1])
    with pytest.raises(NotSemisimple):
        solve_coboundary(La, La.ad_basis, Cochain.zero(2, 2, 2), colinear=True, struct_L=g, struct_V=g)
    case = [c for c in graded_semisimple_cases() if c[0] == "sl2+sl2/swap action"][0]
    _, L2, psi, c, _, _ = case
    with pytest.raises(IntegralUnavailable):
        solve_coboundary(L2, psi, Cochain.zero(6, 6, 2), colinear=True, struct_L=c, struct_V=c)


def test_symmetry_is_required():
    # sl2 inside an S3-graded gl2: V = Q^2 with degrees making psi(a)v land in g_a g_v only
    from levikit.action import HLModule, validate_grading, validate_hlmodule

    G = symmetric_group3()
    L = catalog.sl2()
    gL = validate_grading(L, make_grading(G, ["(123)", "e", "(132)"]))
    nat = [Matrix([[0, 1], [0, 0]]), Matrix([[1, 0], [0, -1]]), Matrix([[0, 0], [1, 0]])]
    # e: v2 -> v1 needs deg v1 = (123) deg v2; with deg v2 = (12) this is (123)(12) = (13)
    v1 = G.label(G.mul(G.index("(123)"), G.index("(12)")))
    gV = make_grading(G, [v1, "(12)"])
    m = HLModule(L, nat, gL, gV)
    assert validate_hlmodule(m) is False
    with pytest.raises(SymmetryRequired):
        solve_coboundary(L, nat, Cochain.zero(3, 2, 2), colinear=True, struct_L=gL, struct_V=gV)


def test_plain_solving_on_random_coboundaries():
    for seed in range(5):
        inst = random_instance(seed)
        L = inst.algebra
        rng = random.Random(seed)
        omega = random_matrix(rng, L.dim, L.dim)
        phi = coboundary1(L, L.ad_basis, omega)
        sol = solve_coboundary(L, L.ad_basis, phi)
        assert coboundary1(L, L.ad_basis, sol) == phi
        # the difference is a 1-cocycle
        assert coboundary1(L, L.ad_basis, sol - omega).is_zero()
