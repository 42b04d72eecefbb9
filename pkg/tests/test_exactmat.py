from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_sympy
from levikit.errors import DimensionMismatch, NoSolution
from levikit.exactmat import (
    EchelonBasis,
    Matrix,
    Q,
    Subspace,
    kernel,
    nullspace,
    preimage,
    qstr,
    rref_canonical,
    solve,
    subspace_ops,
)

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rational_coercion():
    assert Q("3/6") == mpq(1, 2)
    assert Q(Fraction(-2, 4)) == mpq(-1, 2)
    assert Q(7) == 7
    assert qstr(mpq(-6, 4)) == "-3/2"
    assert qstr(Q("5")) == "5"
    with pytest.raises(TypeError):
        Q(0.5)


def test_ragged_matrix_rejected():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    m = Matrix(rows)
    ours = rref_canonical(m)
    theirs, _ = to_sympy(m).rref()
    nonzero = [theirs.row(i) for i in range(theirs.rows) if any(theirs.row(i))]
    assert ours.nrows == len(nonzero)
    for a, b in zip(ours.rows, nonzero):
        assert [sympy.Rational(int(x.numerator), int(x.denominator)) for x in a] == list(b)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_and_nullspace_match_sympy(rows):
    m = Matrix(rows)
    assert m.rank() == to_sympy(m).rank()
    ns = nullspace(m)
    assert len(ns) == m.ncols - to_sympy(m).rank()
    for v in ns:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_matches_sympy(rows):
    m = Matrix(rows)
    s = to_sympy(m)
    if s.det() == 0:
        with pytest.raises(Exception):
            m.inverse()
        return
    assert to_sympy(m.inverse()) == s.inv()
    assert m @ m.inverse() == Matrix.identity(m.nrows)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve(rows, data):
    m = Matrix(rows)
    x0 = data.draw(st.lists(small, min_size=m.ncols, max_size=m.ncols))
    b = m.apply(x0)
    sol = solve(m, b)
    assert m.apply(sol.x) == b
    assert len(sol.kernel) == m.ncols - m.rank()


def test_solve_inconsistent():
    with pytest.raises(NoSolution):
        solve(Matrix([[1, 1], [2, 2]]), [1, 3])


def test_solve_is_deterministic():
    m = Matrix([[1, 2, 3], [0, 1, 1]])
    assert solve(m, [1, 1]).x == solve(m, [1, 1]).x


def test_matrix_algebra():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a @ b == Matrix([[2, 1], [4, 3]])
    assert a.T == Matrix([[1, 3], [2, 4]])
    assert (a + b) - b == a
    assert a * Q("1/2") == Matrix([["1/2", 1], ["3/2", 2]])
    assert a.trace() == 5
    assert Matrix.unflatten(a.flatten(), 2, 2) == a
    assert Matrix.from_columns([(1, 3), (2, 4)]) == a
    assert a.apply((1, 1)) == (3, 7)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5), matrices(4, 5))
def test_subspace_dimension_formula(r1, r2):
    n = min(len(r1[0]), len(r2[0]))
    u = Subspace([r[:n] for r in r1], n)
    v = Subspace([r[:n] for r in r2], n)
    rel = subspace_ops(u, v)
    assert rel.sum.dim + rel.intersection.dim == u.dim + v.dim
    assert rel.intersection <= u and rel.intersection <= v
    assert u <= rel.sum and v <= rel.sum
    assert rel.u_in_v == (u.dim == rel.intersection.dim)


def test_subspace_canonical_form_is_basis_independent():
    a = Subspace([(1, 1, 0), (0, 1, 1)], 3)
    b = Subspace([(1, 2, 1), (1, 0, -1)], 3)
    assert a == b and hash(a) == hash(b)
    assert a.rows == b.rows


def test_subspace_coordinates_and_reduce():
    s = Subspace([(1, 0, 1), (0, 1, 1)], 3)
    v = (2, 3, 5)
    assert s.contains_vector(v)
    c = s.coordinates(v)
    assert tuple(sum(ci * r[k] for ci, r in zip(c, s.rows)) for k in range(3)) == v
    assert s.reduce((0, 0, 1)) != (0, 0, 0)
    assert s.annihilator().dim == 1


def test_kernel_and_preimage():
    m = Matrix([[1, 0, 0], [0, 1, 0]])
    assert kernel(m) == Subspace([(0, 0, 1)], 3)
    w = Subspace([(1, 0)], 2)
    assert preimage(m, w) == Subspace([(1, 0, 0), (0, 0, 1)], 3)


def test_echelon_basis_incremental():
    e = EchelonBasis(3)
    assert e.add((1, 2, 3)) is not None
    assert e.add((2, 4, 6)) is None
    assert e.contains((3, 6, 9))
    assert e.subspace().dim == 1
