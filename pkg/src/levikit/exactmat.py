"""Exact dense linear algebra over the rationals.

Scalars are ``gmpy2.mpq`` values. Vectors are plain tuples of scalars; linear
maps are :class:`Matrix` objects acting on column vectors, so the image of the
j-th basis vector is column j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import flint
from gmpy2 import mpq

from .errors import DimensionMismatch, NoSolution

ZERO = mpq(0)
ONE = mpq(1)


def Q(x) -> mpq:
    """Coerce ``x`` to an exact rational.

    Accepts ints, ``Fraction``, ``mpq`` and strings of the form ``"p"`` or
    ``"p/q"``. Floats are rejected.
    """
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def qstr(x) -> str:
    """Serialize a rational as ``"p/q"`` or ``"p"``."""
    return str(mpq(x))


def vec(xs: Iterable) -> tuple:
    return tuple(Q(x) for x in xs)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    if not c:
        return (ZERO,) * len(v)
    return tuple(c * a for a in v)


def dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def lincomb(coeffs, vectors, n: int) -> tuple:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero_vec(v) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix of rationals."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Sequence[Sequence] = (), ncols: int | None = None):
        data = tuple(tuple(Q(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "Matrix":
        # trusted constructor: rows already tuples of mpq
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(tuple((ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, entries) -> "Matrix":
        d = vec(entries)
        n = len(d)
        return cls._raw(tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        cols = [vec(c) for c in columns]
        if nrows is None:
            if not cols:
                raise DimensionMismatch("cannot infer row count from zero columns")
            nrows = len(cols[0])
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self._rows for x in r)

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self._rows[i][j]
        return self._rows[ij]

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(r[j] for r in self._rows) for j in range(self.ncols)), self.nrows)

    def apply(self, v) -> tuple:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        nz = [(j, a) for j, a in enumerate(v) if a]
        out = []
        for r in self._rows:
            s = ZERO
            for j, a in nz:
                x = r[j]
                if x:
                    s += x * a
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            orows = other._rows
            n = other.ncols
            out = []
            for r in self._rows:
                acc = [ZERO] * n
                for k, a in enumerate(r):
                    if a:
                        for j, b in enumerate(orows[k]):
                            if b:
                                acc[j] += a * b
                out.append(tuple(acc))
            return Matrix._raw(tuple(out), n)
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix._raw(tuple(add(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix._raw(tuple(sub(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self._rows), self.ncols)

    def __mul__(self, c) -> "Matrix":
        c = Q(c)
        return Matrix._raw(tuple(scale(c, r) for r in self._rows), self.ncols)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ncols, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(qstr(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        s = ZERO
        for i in range(self.nrows):
            s += self._rows[i][i]
        return s

    def flatten(self) -> tuple:
        return self.entries

    @classmethod
    def unflatten(cls, v, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(tuple(tuple(v[i * ncols:(i + 1) * ncols]) for i in range(nrows)), ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix._raw(self._rows + other._rows, self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix._raw(tuple(a + b for a, b in zip(self._rows, other._rows)), self.ncols + other.ncols)

    def rank(self) -> int:
        return len(_rref(self._rows, self.ncols)[1])

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        aug = [r + unit_vec(n, i) for i, r in enumerate(self._rows)]
        red, piv = _rref(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise NoSolution("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in red[:n]), n)

    def tolist(self) -> list[list[str]]:
        return [[qstr(x) for x in r] for r in self._rows]


# above this many entries elimination runs in flint; RREF is unique, so both paths agree
FLINT_THRESHOLD = 256


def _rref(rows, ncols: int):
    """Reduced row-echelon form; returns (nonzero reduced rows, pivot columns)."""
    rows = [r for r in rows if any(r)]
    if len(rows) * ncols > FLINT_THRESHOLD:
        return _rref_flint(rows, ncols)
    return _rref_py(rows, ncols)


def _rref_flint(rows, ncols: int):
    m = flint.fmpq_mat(len(rows), ncols,
                       [flint.fmpq(int(x.numerator), int(x.denominator)) for r in rows for x in r])
    red, rank = m.rref()
    out, pivots = [], []
    col = 0
    for i in range(rank):
        while red[i, col] == 0:
            col += 1
        pivots.append(col)
        out.append(tuple(mpq(int(red[i, j].p), int(red[i, j].q)) for j in range(ncols)))
    return out, pivots


def _rref_py(rows, ncols: int):
    """Gauss-Jordan elimination in Python rationals."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nr = len(m)
    for c in range(ncols):
        if r == nr:
            break
        p = r
        while p < nr and not m[p][c]:
            p += 1
        if p == nr:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        row = m[r]
        lead = row[c]
        if lead != 1:
            inv = 1 / lead
            row = [x * inv if x else x for x in row]
            m[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nr):
            if i != r:
                mi = m[i]
                f = mi[c]
                if f:
                    for j in nz:
                        mi[j] -= f * row[j]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m[:r]], pivots


def rref_canonical(m: Matrix) -> Matrix:
    """Unique reduced row-echelon form of ``m`` with zero rows removed."""
    rows, _ = _rref(m.rows, m.ncols)
    return Matrix._raw(tuple(rows), m.ncols)


def nullspace(m: Matrix) -> list[tuple]:
    """Canonical basis of ``{x : m x = 0}`` (one vector per free column)."""
    rows, piv = _rref(m.rows, m.ncols)
    return _nullspace_from_rref(rows, piv, m.ncols)


def _nullspace_from_rref(rows, piv, n):
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for r, p in zip(rows, piv):
            if r[f]:
                v[p] = -r[f]
        basis.append(tuple(v))
    return basis


class Solution(NamedTuple):
    x: tuple
    kernel: list


def solve(a: Matrix, b) -> Solution:
    """One solution of ``a x = b`` plus a basis of the kernel of ``a``.

    The particular solution sets every free variable to zero, so the output is
    deterministic. Raises :class:`NoSolution` when ``b`` is outside the column
    space.
    """
    b = vec(b)
    if len(b) != a.nrows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {a.nrows} equations")
    n = a.ncols
    aug = [r + (bi,) for r, bi in zip(a.rows, b)]
    rows, piv = _rref(aug, n + 1)
    if piv and piv[-1] == n:
        raise NoSolution("right-hand side is not in the column space")
    x = [ZERO] * n
    for r, p in zip(rows, piv):
        x[p] = r[n]
    kernel = _nullspace_from_rref([r[:n] for r in rows], piv, n)
    return Solution(tuple(x), kernel)


class EchelonBasis:
    """Incrementally grown echelon basis; used for span closures.

    Rows are kept in semi-reduced form (each pivot column zero in later rows is
    not required); :meth:`reduce` is exact and ``add`` reports whether the span
    grew.
    """

    def __init__(self, n: int, vectors: Iterable = ()):
        self.n = n
        self._rows: list[tuple] = []  # normalized so the pivot entry is 1
        self._piv: list[int] = []
        self._nz: list[tuple] = []  # (index, value) pairs of each row, pivot excluded
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> tuple:
        w = list(vec(v))
        for nz, p in zip(self._nz, self._piv):
            f = w[p]
            if f:
                w[p] = ZERO
                for j, a in nz:
                    w[j] -= f * a
        return tuple(w)

    def add(self, v) -> tuple | None:
        """Add ``v``; return its nonzero residue if the span grew, else None."""
        w = self.reduce(v)
        for p, a in enumerate(w):
            if a:
                inv = 1 / a
                row = tuple(x * inv if x else x for x in w)
                self._rows.append(row)
                self._piv.append(p)
                self._nz.append(tuple((j, x) for j, x in enumerate(row) if x and j != p))
                return w
        return None

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def subspace(self) -> "Subspace":
        return Subspace(self._rows, self.n)


class Subspace:
    """Subspace of Q^n stored by its canonical reduced row-echelon basis.

    Two subspaces are equal iff their basis rows coincide.
    """

    __slots__ = ("ambient_dim", "_rows", "_pivots", "_hash")

    def __init__(self, vectors: Iterable = (), ambient_dim: int | None = None):
        vs = [vec(v) for v in vectors]
        if ambient_dim is None:
            if not vs:
                raise DimensionMismatch("ambient dimension required for an empty spanning set")
            ambient_dim = len(vs[0])
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, piv = _rref(vs, ambient_dim)
        self.ambient_dim = ambient_dim
        self._rows = tuple(rows)
        self._pivots = tuple(piv)
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls((), n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls((unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, m: Matrix) -> "Subspace":
        """Column space of ``m``."""
        return cls(m.columns(), m.nrows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def basis(self) -> Matrix:
        return Matrix._raw(self._rows, self.ambient_dim)

    @property
    def pivots(self) -> tuple:
        return self._pivots

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("(" + ", ".join(qstr(x) for x in r) + ")" for r in self._rows)
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis=[{body}])"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"subspaces of Q^{self.ambient_dim} and Q^{other.ambient_dim}")

    def reduce(self, v) -> tuple:
        """Normal form of ``v`` modulo this subspace (zero at every pivot)."""
        w = list(v)
        for row, p in zip(self._rows, self._pivots):
            f = w[p]
            if f:
                for j, a in enumerate(row):
                    if a:
                        w[j] -= f * a
        return tuple(w)

    def contains_vector(self, v) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        return not any(self.reduce(v))

    __contains__ = contains_vector

    def coordinates(self, v) -> tuple:
        """Coordinates of ``v`` in the echelon basis; raises NoSolution if v is outside."""
        v = vec(v)
        if any(self.reduce(v)):
            raise NoSolution("vector is not in the subspace")
        return tuple(v[p] for p in self._pivots)

    def inclusion(self) -> Matrix:
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self._rows, self.ambient_dim) if self._rows else Matrix._raw(
            tuple(() for _ in range(self.ambient_dim)), 0)

    def coordinate_map(self) -> Matrix:
        """dim x ambient_dim matrix reading coordinates off pivot columns (valid on the subspace)."""
        n = self.ambient_dim
        return Matrix._raw(tuple(unit_vec(n, p) for p in self._pivots), n)

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates; the matching unit vectors span a complement."""
        ps = set(self._pivots)
        return [i for i in range(self.ambient_dim) if i not in ps]

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(not any(other.reduce(r)) for r in self._rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self._rows + other._rows, self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """{x : <b, x> = 0 for every basis vector b} under the standard pairing."""
        return Subspace(_nullspace_from_rref(self._rows, list(self._pivots), self.ambient_dim), self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        return (self.annihilator() + other.annihilator()).annihilator()

    __and__ = intersection

    def image(self, m: Matrix) -> "Subspace":
        if m.ncols != self.ambient_dim:
            raise DimensionMismatch(f"{m.shape} matrix applied to subspace of Q^{self.ambient_dim}")
        return Subspace([m.apply(r) for r in self._rows], m.nrows)


class SubspaceRelations(NamedTuple):
    sum: Subspace
    intersection: Subspace
    u_in_v: bool
    v_in_u: bool


def subspace_ops(u: Subspace, v: Subspace) -> SubspaceRelations:
    u._check(v)
    return SubspaceRelations(u + v, u & v, u <= v, v <= u)


def kernel(m: Matrix) -> Subspace:
    return Subspace(nullspace(m), m.ncols)


def preimage(m: Matrix, w: Subspace) -> Subspace:
    """{x : m x in w}."""
    ann = w.annihilator()
    if ann.dim == 0:
        return Subspace.full(m.ncols)
    return kernel(ann.basis @ m)


class CoordinateSystem:
    """Coordinates with respect to an arbitrary (ordered, independent) basis."""

    def __init__(self, vectors: Sequence, n: int | None = None):
        vs = [vec(v) for v in vectors]
        k = len(vs)
        if n is None:
            n = len(vs[0]) if vs else 0
        aug = [v + unit_vec(k, i) for i, v in enumerate(vs)]
        rows, piv = _rref(aug, n + k)
        if len(piv) < k or (piv and piv[-1] >= n):
            raise DimensionMismatch("basis vectors are linearly dependent")
        self.n = n
        self.k = k
        self._rows = [r[:n] for r in rows]
        self._trans = [r[n:] for r in rows]
        self._piv = piv

    def coords(self, v) -> tuple:
        v = vec(v)
        w = list(v)
        c = [ZERO] * self.k
        for row, t, p in zip(self._rows, self._trans, self._piv):
            f = w[p]
            if f:
                for j, a in enumerate(row):
                    if a:
                        w[j] -= f * a
                for j, a in enumerate(t):
                    if a:
                        c[j] += f * a
        if any(w):
            raise NoSolution("vector is not in the span of the basis")
        return tuple(c)
