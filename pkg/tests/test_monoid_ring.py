import pytest
from hypothesis import given, settings, strategies as st

from ringlab import catalog as cat
from ringlab.monoid_ring import (MonoidRingElement, SkewContext, add, coefficients_in,
                                 element_from_coefficients, enumerate_elements,
                                 finite_monoid_ring, format_element, lift_ideal, multiply, negate,
                                 parse_element, scalar_multiply, skew_monoid_ring, skew_multiply)
from ringlab.monoids import FreeWord
from ringlab.radicals import (is_semicommutative, lower_nilradical_msequence, nilpotents,
                              class_predicates)
from ringlab.rings import check_ring_axioms, direct_product, find_isomorphism, make_zmod
from ringlab.verdicts import target_set


def el(R, M, *terms):
    return MonoidRingElement.from_terms(R, M, [(a, M.parse(g)) for a, g in terms])


def test_add_negate_scale():
    Z2, C2 = make_zmod(2), cat.monoid("c2")
    x = add(el(Z2, C2, (1, "e")), el(Z2, C2, (1, "g")))
    assert set(x.support) == {C2.parse("e"), C2.parse("g")}
    assert add(x, negate(x)).is_zero()
    Z4, N = make_zmod(4), cat.monoid("nat")
    assert scalar_multiply(2, el(Z4, N, (1, "e"))) == el(Z4, N, (2, "e"))


def test_multiply_examples():
    Z2, MU = make_zmod(2), cat.monoid("matrix-units")
    a = el(Z2, MU, (1, "E22"))
    b = el(Z2, MU, (1, "E11"), (1, "E12"))
    assert multiply(a, b).is_zero()
    C2 = cat.monoid("c2")
    s = el(Z2, C2, (1, "e"), (1, "g"))
    assert multiply(s, s).is_zero()
    Z4, N = make_zmod(4), cat.monoid("nat")
    x = el(Z4, N, (1, "x"))
    assert multiply(x, x) == el(Z4, N, (1, "x^2"))


def test_monoid_zero_is_a_genuine_term():
    Z4, MU = make_zmod(4), cat.monoid("matrix-units")
    a = el(Z4, MU, (1, "E22"))
    b = el(Z4, MU, (1, "E11"), (1, "E12"))
    assert multiply(a, b) == el(Z4, MU, (2, "0"))


def test_skew_multiply_rule():
    R = cat.ring("z2xz2")
    swap = cat.endomorphism(R, "swap")
    N = cat.monoid("nat")
    ctx = SkewContext(R, swap)
    x = N.parse("x")
    for r in R.elements:
        for s in R.elements:
            got = skew_multiply(ctx, MonoidRingElement.monomial(R, N, r, x),
                                MonoidRingElement.monomial(R, N, s, x))
            want = MonoidRingElement.monomial(R, N, int(R.mul[r, swap(s)]), N.parse("x^2"))
            assert got == want


def test_skew_identity_reduces_to_plain():
    Z4, N = make_zmod(4), cat.monoid("nat")
    ctx = SkewContext(Z4, cat.endomorphism(Z4, "id"))
    frag = N.fragment(1)
    els = list(enumerate_elements(Z4, frag))
    for a in els:
        for b in els:
            assert skew_multiply(ctx, a, b) == multiply(a, b)


def test_coefficients_in():
    Z12, C2 = make_zmod(12), cat.monoid("c2")
    assert coefficients_in(MonoidRingElement.zero(Z12, C2), {0})
    assert not coefficients_in(el(Z12, C2, (6, "e"), (1, "g")), {0, 6})
    assert coefficients_in(el(Z12, C2, (6, "e"), (6, "g")), {0, 6})


def test_parse_format_round_trip():
    Z4, MU = make_zmod(4), cat.monoid("matrix-units")
    x = el(Z4, MU, (1, "E22"), (3, "E12"), (2, "0"))
    assert parse_element(Z4, MU, format_element(x)) == x


def test_finite_monoid_rings():
    Z2 = make_zmod(2)
    A = finite_monoid_ring(Z2, cat.monoid("c2"))
    assert A.order == 4
    one_plus_g = A.structure.index_of(el(Z2, cat.monoid("c2"), (1, "e"), (1, "g")))
    assert nilpotents(A) == {0, one_plus_g}
    assert lower_nilradical_msequence(A) == {0, one_plus_g}
    B = finite_monoid_ring(Z2, cat.monoid("lz2"))
    assert find_isomorphism(B, direct_product([Z2, Z2])) is not None
    assert class_predicates(B).reduced
    C = finite_monoid_ring(Z2, cat.monoid("matrix-units"))
    assert C.order == 64
    assert check_ring_axioms(C) == []


@pytest.mark.parametrize("monoid", ["c2", "lz2", "c3"])
def test_table_agrees_with_convolution(monoid):
    Z2, M = make_zmod(2), cat.monoid(monoid)
    A = finite_monoid_ring(Z2, M)
    st_ = A.structure
    for x in A.elements:
        for y in A.elements:
            assert st_.to_element(int(A.mul[x, y])) == multiply(st_.to_element(x), st_.to_element(y))


@pytest.mark.parametrize("size,count", [(1, 2), (2, 4)])
def test_enumerate_counts(size, count):
    frag = cat.monoid("c2").fragment()
    frag = type(frag)(frag.monoid, frag.elements[:size], frag.bound)
    assert len(list(enumerate_elements(make_zmod(2), frag))) == count


def test_enumerate_nat_degree_two():
    assert len(list(enumerate_elements(make_zmod(4), cat.monoid("nat").fragment(2)))) == 64


@pytest.mark.parametrize("ring", [n for n in cat.CATALOG_RINGS if cat.ring(n).order <= 8
                                  and is_semicommutative(cat.ring(n))])
@pytest.mark.parametrize("monoid", ["trivial", "c2", "c3", "lz2"])
def test_radical_lift_contained(ring, monoid):
    R = cat.ring(ring)
    A = finite_monoid_ring(R, cat.monoid(monoid))
    assert lift_ideal(A.structure, target_set(R, "lower-nil")) <= lower_nilradical_msequence(A)


def test_skew_monoid_ring_table():
    R = cat.ring("z2xz2")
    A = skew_monoid_ring(R, FreeWord(["w"], 2), cat.endomorphism(R, "swap"))
    assert A.order == 16
    assert check_ring_axioms(A) == []


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_convolution_associative_and_distributive(a, b, c):
    Z4, frag = make_zmod(4), cat.monoid("nat").fragment(2)
    x, y, z = (element_from_coefficients(Z4, frag, v) for v in (a, b, c))
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z))
