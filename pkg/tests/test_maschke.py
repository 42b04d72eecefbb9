import random

import pytest

from randgen import random_matrix, random_pair
from levikit import catalog
from levikit.action import HLModule, adjoint_module, comodule_of_module, make_grading, validate_hlmodule
from levikit.errors import GroupMismatch, IntegralNotNormalized, NotLEquivariant
from levikit.exactmat import Matrix
from levikit.groups import cyclic_group, free_abelian
from levikit.hopf import make_integral
from levikit.maschke import (
    average,
    average_colinear,
    average_equivariant_projection,
    average_graded,
    is_colinear,
    is_graded_map,
)


@pytest.mark.parametrize("seed", range(30))
def test_averaging_properties(seed):
    rng = random.Random(seed)
    cV, cW, pi, r, t = random_pair(rng)
    assert is_colinear(pi, cW, cV)
    assert pi @ r == Matrix.identity(cV.dim)
    rt = average_colinear(r, cV, cW, t, pi)
    assert is_colinear(rt, cV, cW)
    assert pi @ rt == Matrix.identity(cV.dim)
    assert average_colinear(rt, cV, cW, t) == rt
    # an arbitrary map averages to a colinear one, and averaging it again changes nothing
    s = random_matrix(rng, cW.dim, cV.dim)
    st = average(s, cV, cW, t)
    assert is_colinear(st, cV, cW) and average(st, cV, cW, t) == st


def test_graded_averaging_keeps_degree_preserving_entries():
    G = cyclic_group(3)
    gV = make_grading(G, ["0", "1"])
    gW = make_grading(G, ["1", "0", "1"])
    r = Matrix([[1, 2], [3, 4], [5, 6]])
    out = average_graded(r, gV, gW)
    assert out == Matrix([[0, 2], [3, 0], [0, 6]])
    assert is_graded_map(out, gV, gW)
    assert average_graded(out, gV, gW) == out
    with pytest.raises(GroupMismatch):
        average_graded(r, make_grading(free_abelian(1), [0, 1]), gW)


def test_section_needs_normalized_integral():
    rng = random.Random(0)
    cV, cW, pi, r, t = random_pair(rng)
    unnormalized = make_integral(cV.hopf, tuple(2 * x for x in t.t))
    with pytest.raises(IntegralNotNormalized):
        average_colinear(r, cV, cW, unnormalized, pi)


def test_equivariant_projection_averaging():
    L, act = catalog.l6_z2()
    c = comodule_of_module(L, act)
    from levikit.hopf import find_normalized_integral

    t = find_normalized_integral(c.hopf)
    m = adjoint_module(L, c)
    # the identity is a module map and a projection
    ident = Matrix.identity(6)
    assert average_equivariant_projection(ident, m, m, t) == ident
    with pytest.raises(NotLEquivariant):
        average_equivariant_projection(Matrix.diag([1, 0, 0, 0, 0, 0]), m, m, t)


def test_graded_equivariant_projection():
    L = catalog.sl2()
    g = make_grading(free_abelian(1), [1, 0, -1])
    nat = [Matrix([[0, 1], [0, 0]]), Matrix([[1, 0], [0, -1]]), Matrix([[0, 0], [1, 0]])]
    psi = [Matrix([[a[i, j] if i < 2 and j < 2 else (L.ad_basis[k][i - 2, j - 2] if i >= 2 and j >= 2 else 0)
                     for j in range(5)] for i in range(5)]) for k, a in enumerate(nat)]
    gV = make_grading(free_abelian(1), [1, 0, 1, 0, -1])
    m = HLModule(L, psi, g, gV)
    assert validate_hlmodule(m)
    proj = Matrix.diag([1, 1, 0, 0, 0])
    assert average_equivariant_projection(proj, m, m) == proj
