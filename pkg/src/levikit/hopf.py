"""Finite-dimensional Hopf algebras as explicit tensors, and their integrals.

Conventions, with basis ``h_0 .. h_{m-1}``:

* ``mult[i][j][k]``: coefficient of ``h_k`` in ``h_i h_j``
* ``comult[i][j][k]``: coefficient of ``h_j (x) h_k`` in ``Delta(h_i)``
* ``antipode``: matrix acting on coordinate columns, ``S(h_i) = sum_k antipode[k][i] h_k``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import (
    AntipodeAxiomFailure,
    AssociativityFailure,
    BialgebraFailure,
    CoassociativityFailure,
    CounitFailure,
    DimensionMismatch,
    NoIntegral,
    NormalizationImpossible,
    UnitFailure,
)
from .exactmat import ONE, ZERO, Matrix, Q, nullspace, unit_vec, vec
from .groups import FiniteGroup


class HopfAlgebra:
    def __init__(self, mult, unit, comult, counit, antipode, labels: Sequence[str] | None = None):
        m = len(unit)
        self.dim = m
        self.mult = tuple(tuple(vec(mult[i][j]) for j in range(m)) for i in range(m))
        self.unit = vec(unit)
        self.comult = tuple(tuple(vec(comult[i][j]) for j in range(m)) for i in range(m))
        self.counit = vec(counit)
        self.antipode = antipode if isinstance(antipode, Matrix) else Matrix(antipode)
        self.labels = tuple(labels) if labels is not None else tuple(f"h{i}" for i in range(m))
        if len(self.mult) != m or len(self.comult) != m or len(self.counit) != m:
            raise DimensionMismatch("Hopf tensors disagree on the dimension")
        if self.antipode.shape != (m, m):
            raise DimensionMismatch("antipode must be m x m")
        for i, j in product(range(m), repeat=2):
            if len(self.mult[i][j]) != m or len(self.comult[i][j]) != m:
                raise DimensionMismatch("Hopf tensors must be m x m x m")

    def __repr__(self) -> str:
        return f"HopfAlgebra(dim={self.dim}, labels={list(self.labels)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (self.mult, self.unit, self.comult, self.counit, self.antipode) == (
            other.mult, other.unit, other.comult, other.counit, other.antipode)

    def __hash__(self) -> int:
        return hash((self.mult, self.comult))

    # -- elementwise operations on coordinate vectors --

    def multiply(self, x, y) -> tuple:
        m = self.dim
        out = [ZERO] * m
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        ab = a * b
                        for k, c in enumerate(self.mult[i][j]):
                            if c:
                                out[k] += ab * c
        return tuple(out)

    def coproduct(self, x) -> Matrix:
        """``Delta(x)`` as an m x m coefficient matrix."""
        m = self.dim
        rows = [[ZERO] * m for _ in range(m)]
        for i, a in enumerate(x):
            if a:
                for j in range(m):
                    for k, c in enumerate(self.comult[i][j]):
                        if c:
                            rows[j][k] += a * c
        return Matrix._raw(tuple(tuple(r) for r in rows), m)

    def S(self, x) -> tuple:
        return self.antipode.apply(x)

    def eps(self, x):
        return sum((a * b for a, b in zip(self.counit, x) if a and b), ZERO)

    def basis_vector(self, i: int) -> tuple:
        return unit_vec(self.dim, i)

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.dim) for j in range(i))

    @cached_property
    def product_pairs(self) -> tuple:
        """Nonzero structure constants as ``(i, j, k, c)``."""
        return tuple((i, j, k, c) for i in range(self.dim) for j in range(self.dim)
                     for k, c in enumerate(self.mult[i][j]) if c)

    @cached_property
    def coproduct_pairs(self) -> tuple:
        return tuple((i, j, k, c) for i in range(self.dim) for j in range(self.dim)
                     for k, c in enumerate(self.comult[i][j]) if c)


def _tensor_mul(h: HopfAlgebra, X: Matrix, Y: Matrix) -> Matrix:
    """Product in H (x) H of coefficient matrices."""
    m = h.dim
    out = [[ZERO] * m for _ in range(m)]
    xs = [(a, b, c) for a in range(m) for b in range(m) if (c := X[a, b])]
    ys = [(a, b, c) for a in range(m) for b in range(m) if (c := Y[a, b])]
    for a, b, c in xs:
        for p, q, d in ys:
            cd = c * d
            for k1, u in enumerate(h.mult[a][p]):
                if u:
                    for k2, v in enumerate(h.mult[b][q]):
                        if v:
                            out[k1][k2] += cd * u * v
    return Matrix._raw(tuple(tuple(r) for r in out), m)


def validate_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """Check every Hopf axiom exactly; raise a named failure with indices."""
    m = h.dim
    e = [h.basis_vector(i) for i in range(m)]
    for i, j, k in product(range(m), repeat=3):
        if h.multiply(h.multiply(e[i], e[j]), e[k]) != h.multiply(e[i], h.multiply(e[j], e[k])):
            raise AssociativityFailure(f"(h{i} h{j}) h{k} != h{i} (h{j} h{k})", (i, j, k))
    for i in range(m):
        if h.multiply(h.unit, e[i]) != e[i] or h.multiply(e[i], h.unit) != e[i]:
            raise UnitFailure(f"unit law fails on h{i}", (i,))
    for i in range(m):
        D = h.comult[i]
        # (Delta (x) id) Delta vs (id (x) Delta) Delta, as m^3 coefficient arrays
        left = {}
        right = {}
        for j in range(m):
            for k in range(m):
                c = D[j][k]
                if not c:
                    continue
                for a in range(m):
                    for b, d in enumerate(h.comult[j][a]):
                        if d:
                            left[(a, b, k)] = left.get((a, b, k), ZERO) + c * d
                    for b, d in enumerate(h.comult[k][a]):
                        if d:
                            right[(j, a, b)] = right.get((j, a, b), ZERO) + c * d
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            raise CoassociativityFailure(f"coassociativity fails on h{i}", (i,))
    for i in range(m):
        D = h.coproduct(e[i])
        lhs = tuple(sum((h.counit[j] * D[j, k] for j in range(m)), ZERO) for k in range(m))
        rhs = tuple(sum((D[j, k] * h.counit[k] for k in range(m)), ZERO) for j in range(m))
        if lhs != e[i] or rhs != e[i]:
            raise CounitFailure(f"counit law fails on h{i}", (i,))
    # bialgebra: Delta and eps are algebra maps
    if h.coproduct(h.unit) != Matrix._raw(tuple(tuple(a * b for b in h.unit) for a in h.unit), m):
        raise BialgebraFailure("Delta(1) != 1 (x) 1")
    if h.eps(h.unit) != ONE:
        raise BialgebraFailure("eps(1) != 1")
    cop = [h.coproduct(e[i]) for i in range(m)]
    for i, j in product(range(m), repeat=2):
        prod_ij = h.multiply(e[i], e[j])
        if h.coproduct(prod_ij) != _tensor_mul(h, cop[i], cop[j]):
            raise BialgebraFailure(f"Delta(h{i} h{j}) != Delta(h{i}) Delta(h{j})", (i, j))
        if h.eps(prod_ij) != h.counit[i] * h.counit[j]:
            raise BialgebraFailure(f"eps(h{i} h{j}) != eps(h{i}) eps(h{j})", (i, j))
    # antipode: mu (S (x) id) Delta = unit eps = mu (id (x) S) Delta
    Scols = h.antipode.columns()
    for i in range(m):
        target = tuple(h.counit[i] * u for u in h.unit)
        left = [ZERO] * m
        right = [ZERO] * m
        for j in range(m):
            for k, c in enumerate(h.comult[i][j]):
                if c:
                    for t, x in enumerate(h.multiply(Scols[j], e[k])):
                        left[t] += c * x
                    for t, x in enumerate(h.multiply(e[j], Scols[k])):
                        right[t] += c * x
        if tuple(left) != target or tuple(right) != target:
            raise AntipodeAxiomFailure(f"antipode axiom fails on h{i}", (i,))
    return h


def group_algebra(G: FiniteGroup) -> tuple[HopfAlgebra, "Integral"]:
    """FG with grouplike basis and the identity-indicator integral."""
    m = G.order
    mult = [[unit_vec(m, G.mul(a, b)) for b in range(m)] for a in range(m)]
    comult = [[unit_vec(m, a) if b == a else (ZERO,) * m for b in range(m)] for a in range(m)]
    S = Matrix.from_columns([unit_vec(m, G.inv(a)) for a in range(m)], m)
    h = HopfAlgebra(mult, unit_vec(m, G.identity), comult, (ONE,) * m, S, G.labels)
    validate_hopf(h)
    t = unit_vec(m, G.identity)
    integral = make_integral(h, t)
    if not (integral.normalized and integral.ad_invariant):
        raise AssertionError("identity indicator must be a normalized ad-invariant integral")
    return h, integral


def sweedler4() -> HopfAlgebra:
    """Sweedler's algebra: basis (1, g, x, gx), g^2 = 1, x^2 = 0, xg = -gx."""
    # basis index of g^a x^b is a + 2b
    labels = ("1", "g", "x", "gx")
    m = 4

    def idx(a, b):
        return a + 2 * b

    mult = [[None] * m for _ in range(m)]
    for a, b, c, d in product(range(2), repeat=4):
        v = [ZERO] * m
        # g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
        if b + d < 2:
            v[idx((a + c) % 2, b + d)] = Q((-1) ** (b * c))
        mult[idx(a, b)][idx(c, d)] = tuple(v)
    unit = unit_vec(m, 0)
    one, g, x = 0, 1, 2

    def simple(*terms):
        D = [[ZERO] * m for _ in range(m)]
        for j, k, c in terms:
            D[j][k] += Q(c)
        return D

    gx = 3
    comult = [
        simple((one, one, 1)),
        simple((g, g, 1)),
        simple((g, x, 1), (x, one, 1)),
        simple((one, gx, 1), (gx, g, 1)),
    ]
    counit = (ONE, ONE, ZERO, ZERO)
    # S(x) = -gx, S(gx) = x
    S = Matrix.from_columns([unit_vec(m, one), unit_vec(m, g), vec((0, 0, 0, -1)), unit_vec(m, x)], m)
    return validate_hopf(HopfAlgebra(mult, unit, comult, counit, S, labels))


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra in the dual basis: transpose every structure map."""
    m = h.dim
    mult = [[tuple(h.comult[k][i][j] for k in range(m)) for j in range(m)] for i in range(m)]
    comult = [[tuple(h.mult[i][j][k] for j in range(m)) for i in range(m)] for k in range(m)]
    labels = tuple(f"{lab}*" for lab in h.labels)
    return HopfAlgebra(mult, h.counit, comult, h.unit, h.antipode.T, labels)


@dataclass(frozen=True)
class Integral:
    """Functional ``t`` on H (row vector in the dual basis)."""
    t: tuple
    normalized: bool
    ad_invariant: bool

    def __call__(self, x):
        return sum((a * b for a, b in zip(self.t, x) if a and b), ZERO)


def is_left_integral(h: HopfAlgebra, t) -> bool:
    t = vec(t)
    for i in range(h.dim):
        lhs = [ZERO] * h.dim
        for j in range(h.dim):
            for k, c in enumerate(h.comult[i][j]):
                if c and t[k]:
                    lhs[j] += c * t[k]
        if tuple(lhs) != tuple(t[i] * u for u in h.unit):
            return False
    return True


def is_ad_invariant(h: HopfAlgebra, t) -> bool:
    """``t(a_(1) b S(a_(2))) = eps(a) t(b)`` on all basis pairs."""
    t = vec(t)
    m = h.dim
    e = [h.basis_vector(i) for i in range(m)]
    Scols = h.antipode.columns()
    for a in range(m):
        for b in range(m):
            acc = ZERO
            for j in range(m):
                for k, c in enumerate(h.comult[a][j]):
                    if c:
                        prod = h.multiply(h.multiply(e[j], e[b]), Scols[k])
                        acc += c * sum((x * y for x, y in zip(t, prod) if x and y), ZERO)
            if acc != h.counit[a] * t[b]:
                return False
    return True


def make_integral(h: HopfAlgebra, t) -> Integral:
    t = vec(t)
    if not is_left_integral(h, t):
        raise NoIntegral("functional is not a left integral")
    tone = sum((a * b for a, b in zip(t, h.unit)), ZERO)
    return Integral(t, tone == ONE, is_ad_invariant(h, t))


def left_integral_space(h: HopfAlgebra) -> list[tuple]:
    """Basis of the space of left integrals ``t(a_(2)) a_(1) = t(a) 1``."""
    m = h.dim
    rows = []
    for i in range(m):
        for j in range(m):
            r = [ZERO] * m
            for k, c in enumerate(h.comult[i][j]):
                r[k] += c
            r[i] -= h.unit[j]
            rows.append(r)
    return nullspace(Matrix(rows, m))


def find_normalized_integral(h: HopfAlgebra) -> Integral:
    space = left_integral_space(h)
    if not space:
        raise NoIntegral("only t = 0 is a left integral")
    for v in space:
        tone = sum((a * b for a, b in zip(v, h.unit)), ZERO)
        if tone:
            return make_integral(h, tuple(x / tone for x in v))
    raise NormalizationImpossible(
        f"every left integral vanishes on 1 (integral space has dimension {len(space)})",
        integral_space_dim=len(space), integral_space=space)
