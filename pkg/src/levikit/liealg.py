"""Finite-dimensional Lie algebras over Q given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import flint
from gmpy2 import mpq

from .errors import (
    AntisymmetryViolation,
    DimensionMismatch,
    InternalInconsistency,
    JacobiViolation,
)
from .exactmat import (
    ONE,
    ZERO,
    CoordinateSystem,
    Matrix,
    Q,
    Subspace,
    kernel,
    unit_vec,
    vec,
)


class LieAlgebra:
    """Structure tensor ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Construct through :func:`validate_lie` unless the constants are known to be
    antisymmetric and to satisfy Jacobi.
    """

    def __init__(self, c: Sequence, labels: Sequence[str] | None = None):
        n = len(c)
        self.dim = n
        self.c = tuple(tuple(vec(c[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if len(self.c[i][j]) != n:
                    raise DimensionMismatch(f"structure tensor must be {n}x{n}x{n}")
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
        if len(self.labels) != n:
            raise DimensionMismatch("one label per basis vector")
        # sparse table: (i, j) -> ((k, c), ...)
        self._sparse = {
            (i, j): tuple((k, x) for k, x in enumerate(self.c[i][j]) if x)
            for i in range(n) for j in range(n)
        }

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={list(self.labels)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.c[i][j]

    def bracket(self, x, y) -> tuple:
        n = self.dim
        out = [ZERO] * n
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        sp = self._sparse
        for i, a in xs:
            for j, b in ys:
                for k, c in sp[(i, j)]:
                    out[k] += a * b * c
        return tuple(out)

    @cached_property
    def ad_basis(self) -> tuple:
        """``ad e_i`` for each basis index."""
        n = self.dim
        mats = []
        for i in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            for j in range(n):
                for k, c in self._sparse[(i, j)]:
                    rows[k][j] = c
            mats.append(Matrix._raw(tuple(tuple(r) for r in rows), n))
        return tuple(mats)

    def basis_vector(self, i: int) -> tuple:
        return unit_vec(self.dim, i)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def whole(self) -> Subspace:
        return Subspace.full(self.dim)


def validate_lie(c: Sequence, labels: Sequence[str] | None = None) -> LieAlgebra:
    """Build a Lie algebra, checking antisymmetry and Jacobi exactly."""
    n = len(c)
    for i in range(n):
        if len(c[i]) != n or any(len(c[i][j]) != n for j in range(n)):
            raise DimensionMismatch(f"structure tensor must be {n}x{n}x{n}")
    L = LieAlgebra(c, labels)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if L.c[i][j][k] != -L.c[j][i][k]:
                    raise AntisymmetryViolation(
                        f"c[{i}][{j}][{k}] = {L.c[i][j][k]} but c[{j}][{i}][{k}] = {L.c[j][i][k]}",
                        (i, j, k))
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)
        defect = [ZERO] * n
        for a, b, d in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            for t, x in enumerate(L.bracket(L.bracket(a, b), d)):
                defect[t] += x
        if any(defect):
            raise JacobiViolation(f"Jacobi identity fails on ({i}, {j}, {k})", (i, j, k),
                                  defect=tuple(defect))
    return L


def from_brackets(n: int, brackets: dict, labels: Sequence[str] | None = None) -> LieAlgebra:
    """Build from ``{(i, j): {k: c}}`` listing i<j pairs; validated."""
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (i, j), vals in brackets.items():
        if i == j:
            raise AntisymmetryViolation(f"bracket listed for the diagonal pair ({i}, {i})", (i, i))
        for k, x in vals.items():
            x = Q(x)
            c[i][j][k] = x
            c[j][i][k] = -x
    return validate_lie(c, labels)


def from_matrices(mats: Sequence[Matrix], labels: Sequence[str] | None = None) -> LieAlgebra:
    """Linear Lie algebra spanned by ``mats`` (must be closed under commutators)."""
    mats = [m if isinstance(m, Matrix) else Matrix(m) for m in mats]
    n = len(mats)
    cs = CoordinateSystem([m.flatten() for m in mats]) if n else None
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            comm = mats[i] @ mats[j] - mats[j] @ mats[i]
            coords = cs.coords(comm.flatten())
            c[i][j] = list(coords)
            c[j][i] = [-x for x in coords]
    return validate_lie(c, labels)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra([[[ZERO] * n for _ in range(n)] for _ in range(n)])


def change_basis(L: LieAlgebra, P: Matrix, labels=None) -> LieAlgebra:
    """Same algebra in the basis ``f_j = sum_i P[i][j] e_i``."""
    n = L.dim
    Pinv = P.inverse()
    cols = P.columns()
    c = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c[a][b] = Pinv.apply(L.bracket(cols[a], cols[b]))
    return LieAlgebra(c, labels)


def direct_sum(*algs: LieAlgebra) -> LieAlgebra:
    n = sum(A.dim for A in algs)
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    labels = []
    off = 0
    for A in algs:
        for i in range(A.dim):
            for j in range(A.dim):
                for k, x in enumerate(A.c[i][j]):
                    c[off + i][off + j][off + k] = x
        labels.append(A.labels)
        off += A.dim
    flat = [x for ls in labels for x in ls]
    if len(set(flat)) != len(flat):
        flat = [f"{x}{k + 1}" for k, ls in enumerate(labels) for x in ls]
    return LieAlgebra(c, flat)


# -- linear-algebraic helpers ---------------------------------------------------

def ad(L: LieAlgebra, x) -> Matrix:
    """Matrix of ``y -> [x, y]``."""
    x = vec(x)
    if len(x) != L.dim:
        raise DimensionMismatch(f"vector of length {len(x)} in a {L.dim}-dimensional algebra")
    n = L.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i, a in enumerate(x):
        if a:
            for j in range(n):
                for k, c in L._sparse[(i, j)]:
                    rows[k][j] += a * c
    return Matrix._raw(tuple(tuple(r) for r in rows), n)


def bracket_span(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of ``[u, v]`` over basis vectors of U and V."""
    return Subspace([L.bracket(u, v) for u in U.rows for v in V.rows], L.dim)


def is_subalgebra(L: LieAlgebra, S: Subspace) -> bool:
    return all(S.contains_vector(L.bracket(u, v)) for u, v in combinations(S.rows, 2))


def is_ideal(L: LieAlgebra, I: Subspace) -> bool:
    return all(I.contains_vector(L.bracket(L.basis_vector(i), u))
               for i in range(L.dim) for u in I.rows)


def killing_form(L: LieAlgebra) -> Matrix:
    """``kappa[i][j] = tr(ad e_i ad e_j)``."""
    n = L.dim
    ads = L.ad_basis
    # tr(A B) = sum_{k,l} A[k][l] B[l][k]
    flat = [m.flatten() for m in ads]
    flatT = [m.T.flatten() for m in ads]
    rows = []
    for i in range(n):
        fi = [(p, a) for p, a in enumerate(flat[i]) if a]
        row = []
        for j in range(n):
            fj = flatT[j]
            s = ZERO
            for p, a in fi:
                b = fj[p]
                if b:
                    s += a * b
            row.append(s)
        rows.append(tuple(row))
    return Matrix._raw(tuple(rows), n)


def killing_nondegenerate(L: LieAlgebra) -> bool:
    return killing_form(L).rank() == L.dim


def series(L: LieAlgebra, kind: str = "derived", start: Subspace | None = None) -> list[Subspace]:
    """Derived or lower central series, listed until it stabilizes."""
    if kind not in ("derived", "lower_central"):
        raise ValueError(f"unknown series kind {kind!r}")
    cur = start if start is not None else L.whole()
    out = [cur]
    whole = L.whole()
    while True:
        nxt = bracket_span(L, cur, cur) if kind == "derived" else bracket_span(L, whole, cur)
        if nxt == cur:
            return out
        out.append(nxt)
        cur = nxt


def is_solvable(L: LieAlgebra, S: Subspace | None = None) -> bool:
    return series(L, "derived", S)[-1].dim == 0


def is_nilpotent(L: LieAlgebra, S: Subspace | None = None) -> bool:
    """Nilpotency of the subalgebra S (lower central series of S itself)."""
    cur = S if S is not None else L.whole()
    base = cur
    while cur.dim:
        nxt = bracket_span(L, base, cur)
        if nxt == cur:
            return False
        cur = nxt
    return True


def centralizer(L: LieAlgebra, m: Subspace) -> Subspace:
    """``{x : [x, b] = 0 for all b in m}``: kernel of the stacked ad-matrices."""
    if m.dim == 0:
        return L.whole()
    stacked = None
    for b in m.rows:
        a = ad(L, b)
        stacked = a if stacked is None else stacked.vstack(a)
    return kernel(stacked)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, L.whole())


# -- quotients and subalgebras ----------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    """``L/I`` with section (n x q, columns e_c for the non-pivot c) and projection (q x n)."""
    algebra: LieAlgebra
    ideal: Subspace
    section: Matrix
    projection: Matrix
    indices: tuple


def quotient_algebra(L: LieAlgebra, I: Subspace) -> Quotient:
    n = L.dim
    comp = I.complement_indices()
    q = len(comp)
    section = Matrix.from_columns([unit_vec(n, c) for c in comp], n) if q else Matrix._raw(
        tuple(() for _ in range(n)), 0)
    proj_rows = []
    for c in comp:
        # coordinate c of reduce(v): v_c - sum_r v_{p_r} row_r[c]
        r = [ZERO] * n
        r[c] = ONE
        for row, p in zip(I.rows, I.pivots):
            if row[c]:
                r[p] -= row[c]
        proj_rows.append(tuple(r))
    projection = Matrix._raw(tuple(proj_rows), n)
    cq = [[None] * q for _ in range(q)]
    for a in range(q):
        for b in range(q):
            cq[a][b] = projection.apply(L.c[comp[a]][comp[b]])
    labels = [L.labels[c] for c in comp]
    return Quotient(LieAlgebra(cq, labels), I, section, projection, tuple(comp))


@dataclass(frozen=True)
class Sub:
    """Subalgebra S of L in its echelon basis; ``inclusion`` is n x dim S."""
    algebra: LieAlgebra
    space: Subspace
    inclusion: Matrix


def subalgebra(L: LieAlgebra, S: Subspace) -> Sub:
    rows = S.rows
    d = len(rows)
    cs = [[None] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            cs[a][b] = S.coordinates(L.bracket(rows[a], rows[b]))
    return Sub(LieAlgebra(cs, [f"s{a}" for a in range(d)]), S, S.inclusion())


# -- associative hull and radicals ----------------------------------------------------

@dataclass(frozen=True)
class AssociativeHull:
    ambient: int
    basis: tuple
    trace_gram: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, m: Matrix) -> tuple:
        return CoordinateSystem([b.flatten() for b in self.basis]).coords(m.flatten())


def _to_flint(m: Matrix) -> flint.fmpq_mat:
    return flint.fmpq_mat(m.nrows, m.ncols,
                          [flint.fmpq(int(x.numerator), int(x.denominator)) for r in m.rows for x in r])


def _from_flint(f: flint.fmpq_mat) -> Matrix:
    return Matrix._raw(tuple(tuple(mpq(int(f[i, j].p), int(f[i, j].q)) for j in range(f.ncols()))
                             for i in range(f.nrows())), f.ncols())


def _flat(f: flint.fmpq_mat) -> list:
    return [f[i, j] for i in range(f.nrows()) for j in range(f.ncols())]


def _independent_tail(basis_rows: list, cand_rows: list, width: int) -> list[int]:
    """Indices of candidates that extend ``basis_rows`` (independent), greedily in order."""
    rows = basis_rows + cand_rows
    m = flint.fmpq_mat(width, len(rows), [rows[c][r] for r in range(width) for c in range(len(rows))])
    red, rank = m.rref()
    pivots = []
    col = 0
    for i in range(rank):
        while red[i, col] == 0:
            col += 1
        pivots.append(col)
    k = len(basis_rows)
    return [p - k for p in pivots if p >= k]


def associative_hull(gens: Sequence[Matrix], ambient: int | None = None) -> AssociativeHull:
    """Associative (non-unital) algebra generated by ``gens``.

    Breadth-first closure under left multiplication by generators; every
    accepted element is multiplied by every generator, so the span is closed.
    The elimination runs on flint rational matrices.
    """
    gens = list(gens)
    if ambient is None:
        ambient = gens[0].nrows if gens else 0
    width = ambient * ambient
    fgens = [_to_flint(g) for g in gens]
    basis: list = []
    flat: list = []

    def accept(cands):
        rows = [_flat(c) for c in cands]
        keep = _independent_tail(flat, rows, width) if rows else []
        for i in keep:
            basis.append(cands[i])
            flat.append(rows[i])
        return [cands[i] for i in keep]

    frontier = accept(fgens)
    while frontier and len(basis) < width:
        frontier = accept([g * x for x in frontier for g in fgens])
    d = len(basis)
    if d == 0:
        return AssociativeHull(ambient, (), Matrix.zeros(0, 0))
    F = flint.fmpq_mat(d, width, [x for r in flat for x in r])
    tflat = [_flat(b.transpose()) for b in basis]
    FT = flint.fmpq_mat(width, d, [t[p] for p in range(width) for t in tflat])
    gram = _from_flint(F * FT)
    return AssociativeHull(ambient, tuple(_from_flint(b) for b in basis), gram)


def solvable_radical(L: LieAlgebra, check: bool = True) -> Subspace:
    """Killing-orthogonal complement of [L, L]."""
    n = L.dim
    if n == 0:
        return L.zero()
    D = bracket_span(L, L.whole(), L.whole())
    if D.dim == 0:
        return L.whole()
    kappa = killing_form(L)
    R = kernel(D.basis @ kappa)
    if check:
        if not is_ideal(L, R):
            raise InternalInconsistency("computed radical is not an ideal")
        if not is_solvable(L, R):
            raise InternalInconsistency("computed radical is not solvable")
        if R.dim < n and not killing_nondegenerate(quotient_algebra(L, R).algebra):
            raise InternalInconsistency("L/R has a degenerate Killing form")
    return R


def nilradical(L: LieAlgebra, check: bool = True) -> Subspace:
    """``{x : ad x in J(A)}`` where A is the associative hull of ad L.

    J(A) is the trace-form radical ``{a : tr(ab) = 0 for all b in A}``.
    """
    n = L.dim
    if n == 0:
        return L.zero()
    ads = L.ad_basis
    hull = associative_hull(ads, n)
    if hull.dim == 0:
        N = L.whole()
    else:
        cs = CoordinateSystem([b.flatten() for b in hull.basis])
        M = Matrix.from_columns([cs.coords(a.flatten()) for a in ads], hull.dim)
        N = kernel(hull.trace_gram @ M)
    if check:
        _check_nilradical(L, N)
    return N


def _check_nilradical(L: LieAlgebra, N: Subspace) -> None:
    if not is_ideal(L, N):
        raise InternalInconsistency("computed nilradical is not an ideal")
    if not is_nilpotent(L, N):
        raise InternalInconsistency("computed nilradical is not nilpotent")
    R = solvable_radical(L, check=False)
    if not N <= R:
        raise InternalInconsistency("nilradical is not inside the solvable radical")
    if not bracket_span(L, L.whole(), R) <= N:
        raise InternalInconsistency("[L, R] is not inside the nilradical")
    # maximality: the preimage of the quotient's nilradical is nilpotent only if it is N
    if N.dim < L.dim:
        quot = quotient_algebra(L, N)
        Nq = nilradical(quot.algebra, check=False)
        pre = Subspace([quot.section.apply(v) for v in Nq.rows], L.dim) + N
        if pre != N and is_nilpotent(L, pre):
            raise InternalInconsistency("a larger nilpotent ideal exists")


def nilpotency_witness(L: LieAlgebra, N: Subspace) -> list[Subspace]:
    """Lower central series of the subalgebra N (ends at 0 iff N is nilpotent)."""
    out = [N]
    cur = N
    while cur.dim:
        nxt = bracket_span(L, N, cur)
        if nxt == cur:
            break
        out.append(nxt)
        cur = nxt
    return out


def structure_dict(L: LieAlgebra) -> dict:
    """``{(i, j): {k: c}}`` for i<j with nonzero brackets."""
    out = {}
    for i, j in combinations(range(L.dim), 2):
        vals = {k: x for k, x in L._sparse[(i, j)]}
        if vals:
            out[(i, j)] = vals
    return out


def span_in(L: LieAlgebra, vectors: Iterable) -> Subspace:
    return Subspace(list(vectors), L.dim)
