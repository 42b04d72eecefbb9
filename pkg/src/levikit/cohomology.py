"""Chevalley-Eilenberg cochains of degree 1..3 and solving ``d omega = Phi``.

A representation is a sequence ``psi`` of ``dim V x dim V`` matrices, one per
basis vector of L. A 1-cochain is a ``dim V x n`` matrix; 2- and 3-cochains
store their values on increasing index tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .action import ComoduleStructure, Grading, HLModule, validate_hlmodule
from .errors import (
    DimensionMismatch,
    IntegralNotAdInvariant,
    IntegralNotNormalized,
    IntegralUnavailable,
    InternalInconsistency,
    NotACocycle,
    NotSemisimple,
    SymmetryRequired,
)
from .exactmat import ZERO, Matrix, solve, vec
from .hopf import Integral
from .liealg import LieAlgebra, killing_nondegenerate
from .maschke import average

EquivSide = Grading | ComoduleStructure | None


@dataclass(frozen=True)
class Cochain:
    """Alternating k-linear map ``L^k -> V`` stored on increasing index tuples."""
    n: int
    dim_v: int
    degree: int
    values: dict

    @classmethod
    def from_function(cls, n: int, dim_v: int, degree: int, f: Callable) -> "Cochain":
        vals = {}
        for idx in combinations(range(n), degree):
            v = vec(f(*idx))
            if any(v):
                vals[idx] = v
        return cls(n, dim_v, degree, vals)

    @classmethod
    def zero(cls, n: int, dim_v: int, degree: int) -> "Cochain":
        return cls(n, dim_v, degree, {})

    def value(self, *idx) -> tuple:
        """Value on basis vectors in any order (sign from sorting)."""
        if len(set(idx)) < len(idx):
            return (ZERO,) * self.dim_v
        order = sorted(range(len(idx)), key=lambda a: idx[a])
        key = tuple(idx[a] for a in order)
        # parity of the sorting permutation
        sign = 1
        seen = [False] * len(order)
        for a in range(len(order)):
            if not seen[a]:
                b, length = a, 0
                while not seen[b]:
                    seen[b] = True
                    b = order[b]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        v = self.values.get(key)
        if v is None:
            return (ZERO,) * self.dim_v
        return v if sign == 1 else tuple(-x for x in v)

    def evaluate(self, *xs) -> tuple:
        """Multilinear extension to arbitrary vectors."""
        out = [ZERO] * self.dim_v
        supports = [[(i, a) for i, a in enumerate(x) if a] for x in xs]

        def rec(pos, idx, coef):
            if pos == len(xs):
                v = self.value(*idx)
                for q, y in enumerate(v):
                    if y:
                        out[q] += coef * y
                return
            for i, a in supports[pos]:
                if i not in idx:
                    rec(pos + 1, idx + (i,), coef * a)

        rec(0, (), 1)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        a = {k: v for k, v in self.values.items() if any(v)}
        b = {k: v for k, v in other.values.items() if any(v)}
        return (self.n, self.dim_v, self.degree) == (other.n, other.dim_v, other.degree) and a == b

    def __hash__(self) -> int:
        return hash((self.n, self.dim_v, self.degree))


def bracket_cochain(L: LieAlgebra) -> Cochain:
    """The 2-cochain ``(x, y) -> [x, y]`` with values in the adjoint module."""
    return Cochain.from_function(L.dim, L.dim, 2, lambda i, j: L.c[i][j])


def _psi_apply(psi, i: int, v) -> tuple:
    return psi[i].apply(v)


def coboundary0(L: LieAlgebra, psi: Sequence[Matrix], v) -> Matrix:
    """``(d v)(x) = psi(x) v`` as a dim V x dim L matrix."""
    v = vec(v)
    return Matrix.from_columns([p.apply(v) for p in psi], len(v))


def coboundary1(L: LieAlgebra, psi: Sequence[Matrix], omega: Matrix) -> Cochain:
    """``(d omega)(x, y) = psi(x) omega(y) - psi(y) omega(x) - omega([x, y])``."""
    n = L.dim
    dv = omega.nrows
    if omega.ncols != n:
        raise DimensionMismatch("1-cochain must be dim V x dim L")
    cols = omega.columns()

    def f(i, j):
        a = psi[i].apply(cols[j])
        b = psi[j].apply(cols[i])
        c = omega.apply(L.c[i][j])
        return tuple(x - y - z for x, y, z in zip(a, b, c))

    return Cochain.from_function(n, dv, 2, f)


def coboundary2(L: LieAlgebra, psi: Sequence[Matrix], phi: Cochain) -> Cochain:
    """Standard Chevalley-Eilenberg differential on 2-cochains."""
    n = L.dim
    dv = phi.dim_v

    def f(i, j, k):
        out = [ZERO] * dv
        terms = [
            (1, psi[i].apply(phi.value(j, k))),
            (-1, psi[j].apply(phi.value(i, k))),
            (1, psi[k].apply(phi.value(i, j))),
            (-1, phi.evaluate(L.c[i][j], L.basis_vector(k))),
            (1, phi.evaluate(L.c[i][k], L.basis_vector(j))),
            (-1, phi.evaluate(L.c[j][k], L.basis_vector(i))),
        ]
        for s, v in terms:
            for q, x in enumerate(v):
                if x:
                    out[q] += s * x
        return out

    return Cochain.from_function(n, dv, 3, f)


def coboundary(L: LieAlgebra, psi: Sequence[Matrix], w):
    if isinstance(w, tuple):
        return coboundary0(L, psi, w)
    if isinstance(w, Matrix):
        return coboundary1(L, psi, w)
    if isinstance(w, Cochain) and w.degree == 2:
        return coboundary2(L, psi, w)
    raise TypeError("coboundary is implemented on 0-, 1- and 2-cochains")


# -- colinearity ----------------------------------------------------------------------

def _graded_ok(vals: tuple, gV: Grading, want) -> bool:
    return all(not x or gV.degrees[q] == want for q, x in enumerate(vals))


def is_colinear_cochain(L: LieAlgebra, w, sL: EquivSide, sV: EquivSide) -> bool:
    if sL is None:
        return True
    if isinstance(sL, Grading):
        G = sL.group
        if isinstance(w, Matrix):
            return all(_graded_ok(w.column(i), sV, sL.degrees[i]) for i in range(L.dim))
        for idx in combinations(range(L.dim), w.degree):
            want = G.identity
            for i in idx:
                want = G.mul(want, sL.degrees[i])
            if not _graded_ok(w.value(*idx), sV, want):
                return False
        return True
    h = sL.hopf
    if isinstance(w, Matrix):
        return all(TV @ w == w @ TL for TL, TV in zip(sL.ops, sV.ops))
    if w.degree != 2:
        raise TypeError("comodule colinearity is implemented for degrees 1 and 2")
    n = L.dim
    imgs = [[T.column(i) for i in range(n)] for T in sL.ops]
    for i, j in combinations(range(n), 2):
        base = w.value(i, j)
        rhs = [[ZERO] * w.dim_v for _ in range(h.dim)]
        for k, l, p, mu in h.product_pairs:
            v = w.evaluate(imgs[k][i], imgs[l][j])
            for q, x in enumerate(v):
                if x:
                    rhs[p][q] += mu * x
        for p in range(h.dim):
            if sV.ops[p].apply(base) != tuple(rhs[p]):
                return False
    return True


# -- solving -----------------------------------------------------------------------------

def _coboundary_system(L: LieAlgebra, psi: Sequence[Matrix], dv: int) -> Matrix:
    """Matrix of ``omega -> d omega`` on unknowns ``omega[q][i]`` (index q*n + i)."""
    n = L.dim
    rows = []
    for i, j in combinations(range(n), 2):
        for q in range(dv):
            r = [ZERO] * (dv * n)
            for l in range(dv):
                a = psi[i][q, l]
                if a:
                    r[l * n + j] += a
                b = psi[j][q, l]
                if b:
                    r[l * n + i] -= b
            for k, c in L._sparse[(i, j)]:
                r[q * n + k] -= c
            rows.append(r)
    return Matrix(rows, dv * n)


def solve_coboundary(L: LieAlgebra, psi: Sequence[Matrix], phi: Cochain, colinear: bool = False,
                     struct_L: EquivSide = None, struct_V: EquivSide = None,
                     t: Integral | None = None) -> Matrix:
    """Find a 1-cochain ``omega`` with ``d omega = phi``.

    In colinear mode a plain solution is averaged and the average is checked to
    still solve the equation.
    """
    n, dv = L.dim, phi.dim_v
    if len(psi) != n or phi.n != n or phi.degree != 2:
        raise DimensionMismatch("representation or cochain does not match the algebra")
    if not coboundary2(L, psi, phi).is_zero():
        raise NotACocycle("d phi != 0")
    if colinear and struct_L is not None:
        if not killing_nondegenerate(L):
            raise NotSemisimple("colinear solving needs a semisimple algebra")
        symmetric = validate_hlmodule(HLModule(L, psi, struct_L, struct_V))
        if not symmetric:
            raise SymmetryRequired("the (H,L)-module is not symmetric")
        if isinstance(struct_L, ComoduleStructure):
            if t is None:
                raise IntegralUnavailable("colinear solving over a comodule needs an integral")
            if not t.normalized:
                raise IntegralNotNormalized("integral does not satisfy t(1) = 1")
            if not t.ad_invariant:
                raise IntegralNotAdInvariant("integral is not ad-invariant")
        if not is_colinear_cochain(L, phi, struct_L, struct_V):
            raise NotACocycle("phi is not a colinear cochain")
    if dv == 0 or n < 2:
        if not phi.is_zero():
            raise NotACocycle("nonzero cochain in a degenerate complex")
        return Matrix.zeros(dv, n)
    A = _coboundary_system(L, psi, dv)
    b = []
    for i, j in combinations(range(n), 2):
        b.extend(phi.value(i, j))
    sol = solve(A, b)
    omega = Matrix([sol.x[q * n:(q + 1) * n] for q in range(dv)], n)
    if colinear and struct_L is not None:
        omega = average(omega, struct_L, struct_V, t)
        if not is_colinear_cochain(L, omega, struct_L, struct_V):
            raise InternalInconsistency("averaged 1-cochain is not colinear")
    if coboundary1(L, psi, omega) != phi:
        raise InternalInconsistency("d omega != phi after solving")
    return omega
