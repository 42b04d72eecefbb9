import pytest

from levikit.errors import (
    AntipodeAxiomFailure,
    AssociativityFailure,
    BialgebraFailure,
    CoassociativityFailure,
    CounitFailure,
    NoIntegral,
    NormalizationImpossible,
    NotAGroup,
    UnitFailure,
)
from levikit.exactmat import ONE, ZERO, Matrix, Q
from levikit.groups import cyclic_group, finite_group, free_abelian, symmetric_group3
from levikit.hopf import (
    HopfAlgebra,
    dual_hopf,
    find_normalized_integral,
    group_algebra,
    is_ad_invariant,
    is_left_integral,
    left_integral_space,
    make_integral,
    sweedler4,
    validate_hopf,
)


def test_symmetric_group_table():
    G = symmetric_group3()
    a, b = G.index("(12)"), G.index("(23)")
    # (12)(23) as composition g(h(i)): 0->0->1, 1->2->2, 2->1->0 is the 3-cycle (0 1 2)
    assert G.label(G.mul(a, b)) == "(123)"
    assert G.mul(a, b) != G.mul(b, a)
    assert all(G.mul(g, G.inv(g)) == G.identity for g in G.elements())


def test_finite_group_validation():
    with pytest.raises(NotAGroup):
        finite_group(["a", "b"], [[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        finite_group(["a", "b"], [[0, 1]])
    # a non-associative loop of order 5 with identity and inverses
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        finite_group(list("abcde"), loop)


def test_free_abelian():
    Z2 = free_abelian(2)
    assert Z2.mul((1, -2), (3, 4)) == (4, 2)
    assert Z2.inv((1, -2)) == (-1, 2)
    assert Z2.identity == (0, 0)


@pytest.mark.parametrize("G", [cyclic_group(1), cyclic_group(2), cyclic_group(5), symmetric_group3()])
def test_group_algebra_and_dual_are_hopf(G):
    h, t = group_algebra(G)
    validate_hopf(h)
    d = validate_hopf(dual_hopf(h))
    assert dual_hopf(d).mult == h.mult and dual_hopf(d).comult == h.comult
    assert t.normalized and t.ad_invariant
    assert t.t == tuple(ONE if g == G.identity else ZERO for g in G.elements())
    # on the function algebra the normalized integral is the uniform average
    td = find_normalized_integral(d)
    assert td.t == tuple(Q(1) / G.order for _ in G.elements())
    assert td.ad_invariant


def test_sweedler_integral_space():
    h = sweedler4()
    # worked by hand: t = delta_gx is the only left integral up to scale, and t(1) = 0
    assert left_integral_space(h) == [(0, 0, 0, 1)]
    assert is_left_integral(h, (0, 0, 0, 1))
    assert not is_left_integral(h, (0, 0, 1, 0))
    with pytest.raises(NormalizationImpossible) as e:
        find_normalized_integral(h)
    assert e.value.details["integral_space_dim"] == 1
    assert e.value.exit_code == 2


def test_sweedler_dual_is_selfdual_and_fails_normalization():
    d = validate_hopf(dual_hopf(sweedler4()))
    with pytest.raises(NormalizationImpossible):
        find_normalized_integral(d)


def test_make_integral_rejects_non_integrals():
    h, _ = group_algebra(cyclic_group(3))
    with pytest.raises(NoIntegral):
        make_integral(h, (1, 1, 0))
    assert is_ad_invariant(h, (1, 0, 0))


def _perturbed(h: HopfAlgebra, **kw) -> HopfAlgebra:
    parts = dict(mult=h.mult, unit=h.unit, comult=h.comult, counit=h.counit, antipode=h.antipode)
    parts.update(kw)
    return HopfAlgebra(parts["mult"], parts["unit"], parts["comult"], parts["counit"], parts["antipode"])


def test_axiom_failures_are_named():
    h, _ = group_algebra(cyclic_group(3))
    with pytest.raises(AntipodeAxiomFailure):
        validate_hopf(_perturbed(h, antipode=Matrix.identity(3)))
    with pytest.raises(CounitFailure):
        validate_hopf(_perturbed(h, counit=(ONE, ONE, ZERO)))
    with pytest.raises(UnitFailure):
        validate_hopf(_perturbed(h, unit=(ZERO, ONE, ZERO)))
    mult = [list(r) for r in h.mult]
    mult[1][1] = (ZERO, ZERO, ONE * 2)
    with pytest.raises(AssociativityFailure):
        validate_hopf(_perturbed(h, mult=mult))
    comult = [list(r) for r in h.comult]
    comult[1] = [(ZERO,) * 3, (ZERO, ZERO, ONE), (ZERO,) * 3]
    with pytest.raises((CoassociativityFailure, CounitFailure)):
        validate_hopf(_perturbed(h, comult=comult))
    # primitive-like coproduct on a grouplike basis element breaks multiplicativity
    comult = [list(r) for r in h.comult]
    comult[0] = [(ZERO,) * 3 for _ in range(3)]
    comult[0][0] = (ONE, ZERO, ZERO)
    comult[1] = [(ZERO, ONE, ZERO), (ONE, ZERO, ZERO), (ZERO,) * 3]
    with pytest.raises((BialgebraFailure, CoassociativityFailure, CounitFailure)):
        validate_hopf(_perturbed(h, comult=comult))
