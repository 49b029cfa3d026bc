import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringlab import catalog as cat
from ringlab.rings import (FiniteRing, RingError, check_ring_axioms, closure_mask, direct_product,
                           enumerate_ideals, find_isomorphism, ideal_violation, localization,
                           make_ideal, make_ring, make_zmod, projection, quotient, ring_generators,
                           subring_generated)


def test_zmod_basic():
    Z2 = make_zmod(2)
    assert Z2.order == 2
    assert Z2.add[Z2.one, Z2.one] == Z2.zero
    Z12 = make_zmod(12)
    assert Z12.mul[4, 3] == 0
    Z4 = make_zmod(4)
    assert Z4.mul[2, 2] == 0


@pytest.mark.parametrize("n", [1, 2, 3, 6, 12])
def test_zmod_axioms(n):
    assert check_ring_axioms(make_zmod(n)) == []


def test_corrupted_table_is_caught():
    Z4 = make_zmod(4)
    mul = Z4.mul.copy()
    mul[2, 3] = 1
    bad = FiniteRing(4, Z4.add, mul, Z4.neg, 0, 1, Z4.labels, "bad", None)
    found = check_ring_axioms(bad)
    assert found
    assert {v.law for v in found} & {"associativity", "left distributivity", "right distributivity",
                                      "commutativity of mul"} or found[0].witness


def test_make_ring_rejects_malformed_tables():
    Z4 = make_zmod(4)
    with pytest.raises(RingError):
        make_ring(Z4.add, Z4.mul[:3, :3], 0, 1)
    add = Z4.add.copy()
    add[1, 3] = 1
    with pytest.raises(RingError):
        make_ring(add, Z4.mul, 0, 1)


def test_direct_product():
    Z2, Z3, Z4 = make_zmod(2), make_zmod(3), make_zmod(4)
    P = direct_product([Z2, Z2])
    assert P.order == 4
    assert P.label(P.one) == "(1,1)"
    assert find_isomorphism(make_zmod(6), direct_product([Z2, Z3])) is not None
    assert direct_product([Z4]).same_tables(Z4)


def test_projection_is_homomorphism():
    Rs = [make_zmod(2), make_zmod(4)]
    P = direct_product(Rs)
    for k in range(2):
        assert projection(P, Rs, k).is_homomorphism()


def test_quotient():
    Z12 = make_zmod(12)
    Q, pi = quotient(Z12, make_ideal(Z12, [0, 6]))
    assert Q.order == 6
    assert find_isomorphism(Q, make_zmod(6)) is not None
    assert pi.is_homomorphism()
    R = cat.ring("t2(z2)")
    Q0, _ = quotient(R, make_ideal(R, [R.zero]))
    assert find_isomorphism(Q0, R) is not None
    Qall, _ = quotient(R, make_ideal(R, R.elements))
    assert Qall.order == 1


def test_subring_generated():
    Z12 = make_zmod(12)
    S, incl = subring_generated(Z12, [4], with_one=False)
    assert sorted(incl.table) == [0, 4, 8]
    R = cat.ring("t2(z4)")
    P, _ = subring_generated(R, [R.one])
    assert P.order == 4
    T = cat.ring("t2(z2)")
    S, _ = subring_generated(T, [T.one])
    assert S.order == 2
    assert find_isomorphism(S, make_zmod(2)) is not None


def test_ring_generators_generate():
    for name in ["z12", "t2(z2)", "h3(z2)", "m2(z2)"]:
        R = cat.ring(name)
        assert closure_mask(R, ring_generators(R), with_one=True).all()


def test_enumerate_ideals():
    ideals = enumerate_ideals(make_zmod(12))
    assert sorted(len(I.members) for I in ideals) == [1, 2, 3, 4, 6, 12]
    assert len(enumerate_ideals(make_zmod(2))) == 2
    T = cat.ring("t2(z2)")
    e12 = T.index("[[0,1],[0,0]]")
    assert frozenset({0, e12}) in {I.members for I in enumerate_ideals(T)}


def test_ideal_violation():
    Z12 = make_zmod(12)
    assert ideal_violation(Z12, [0, 6]) is None
    assert ideal_violation(Z12, [0, 5]) is not None


def test_find_isomorphism():
    Z4 = make_zmod(4)
    assert find_isomorphism(Z4, direct_product([make_zmod(2)] * 2)) is None
    phi = find_isomorphism(Z4, Z4)
    assert list(phi.table) == list(Z4.elements)


def test_localization():
    Z9 = make_zmod(9)
    L = localization(Z9, [1, 2, 4, 8, 7, 5])
    assert L.collapsed
    assert find_isomorphism(L.ring, Z9) is not None
    R = cat.ring("t2(z2)")
    assert localization(R, [R.one]).ring.same_tables(R)
    with pytest.raises(RingError):
        localization(make_zmod(6), [1, 2, 4])


def test_json_round_trip():
    R = cat.ring("t2(z2)")
    assert FiniteRing.from_json(R.to_json()).same_tables(R)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=30))
def test_zmod_matches_integer_arithmetic(n):
    R = make_zmod(n)
    a = np.arange(n)
    assert (R.add == (a[:, None] + a[None, :]) % n).all()
    assert (R.mul == (a[:, None] * a[None, :]) % n).all()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["z2", "z4", "z2xz2", "t2(z2)", "z2xz4"]),
       st.sampled_from(["z2", "z3", "z4"]))
def test_products_are_rings(a, b):
    P = direct_product([cat.ring(a), cat.ring(b)])
    assert P.order == cat.ring(a).order * cat.ring(b).order
    assert check_ring_axioms(P) == []
