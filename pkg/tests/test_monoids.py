import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ringlab import catalog as cat
from ringlab.monoids import (CyclicGroup, FGAbelian, FreeCommutative, FreeWord, as_table,
                             coproduct_monoid, finite_order_element, is_cancellative, lex_order,
                             make_matrix_unit_monoid, make_table_monoid, monoid_ideal_check,
                             product_monoid, submonoid_fragment, torsion_check_fg_abelian,
                             up_violation_search)

FINITE = ["c2", "c3", "c4", "lz2", "matrix-units"]


def test_matrix_units_products():
    M = make_matrix_unit_monoid()
    p = M.parse
    assert M.op(p("E22"), p("E11")) == p("0")
    assert M.op(p("I"), p("E12")) == p("E12")
    assert M.op(p("E12"), p("E21")) == p("E11")
    assert len(M.elements) == 6


def test_cancellative():
    ok, w = is_cancellative(make_matrix_unit_monoid())
    assert not ok and w is not None
    assert is_cancellative(CyclicGroup(3))[0]
    ez = make_table_monoid([[0, 1], [1, 1]], ["e", "z"], name="ez")
    assert not is_cancellative(ez)[0]


def test_up_violations():
    M = make_matrix_unit_monoid()
    A, B = up_violation_search(M, 2)
    assert len(A) <= 2 and len(B) <= 2
    prods = [M.op(a, b) for a in A for b in B]
    assert all(prods.count(x) > 1 for x in prods)
    A, B = up_violation_search(CyclicGroup(2), 2)
    assert set(A) == set(B) == {0, 1}
    assert "by construction" in up_violation_search(FreeCommutative(1), 2)


@pytest.mark.parametrize("name", FINITE)
def test_finite_monoids_never_up(name):
    M = cat.monoid(name)
    els, t = as_table(M)
    n = len(els)
    assert all(t[t[a, b], c] == t[a, t[b, c]] for a in range(n) for b in range(n) for c in range(n))
    e = els.index(M.identity)
    assert all(t[e, a] == a == t[a, e] for a in range(n))
    assert isinstance(up_violation_search(M, n), tuple)


def test_torsion():
    assert torsion_check_fg_abelian([0, 0])
    assert not torsion_check_fg_abelian([2])
    assert not torsion_check_fg_abelian([0, 3])
    assert finite_order_element(CyclicGroup(4)) == (1, 4)
    assert finite_order_element(FreeCommutative(2)) is None
    assert finite_order_element(make_matrix_unit_monoid()) is None
    g, n = finite_order_element(FGAbelian([0, 3]))
    G = FGAbelian([0, 3])
    assert n == 3 and G.power(g, 3) == G.identity


def test_product_and_coproduct():
    P = product_monoid(FreeCommutative(1), CyclicGroup(2))
    assert len(P.fragment(2)) == 6
    for a, b in itertools.product(P.fragment(2).elements, repeat=2):
        assert P.op(a, b) == (P.factors[0].op(a[0], b[0]), P.factors[1].op(a[1], b[1]))
    C = coproduct_monoid([CyclicGroup(3)])
    els, _ = as_table(C)
    assert len(els) == 3


def test_monoid_ideal_and_submonoid():
    N = FreeCommutative(1)
    assert monoid_ideal_check(N, lambda g: g[0] >= 1, bound=3)
    assert not monoid_ideal_check(N, lambda g: g[0] == 1, bound=3)
    frag = submonoid_fragment(FreeCommutative(2), [(1, 0)], 3)
    assert set(frag.elements) == {(0, 0), (1, 0), (2, 0), (3, 0)}


def test_lex_order():
    M = FreeCommutative(2)
    lex = lex_order(M)
    assert lex.less((0, 1), (1, 0))
    frag = M.fragment(3)
    assert lex.verify(frag) is None
    for a, b in itertools.combinations(frag.elements, 2):
        assert lex.less(a, b) or lex.less(b, a)
        assert lex.less(a, b) == lex.less(M.op(a, (1, 1)), M.op(b, (1, 1)))


def test_free_word_with_nil_degree():
    W = FreeWord(["w"], 3)
    w = W.parse("w")
    assert W.op(w, w) == W.power(w, 2)
    assert W.op(W.power(w, 2), w) is None
    assert W.is_finite()


def test_format_parse_round_trip():
    for name in ["nat", "nat2", "free2", "prod(nat,c2)"] + FINITE:
        M = cat.monoid(name)
        frag = M.fragment(2) if not M.is_finite() or "prod" in name else M.fragment()
        for g in frag.elements:
            assert M.parse(M.format(g)) == g


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=2, max_size=2),
       st.lists(st.integers(0, 5), min_size=2, max_size=2),
       st.lists(st.integers(0, 5), min_size=2, max_size=2))
def test_free_commutative_associative(a, b, c):
    M = FreeCommutative(2)
    a, b, c = tuple(a), tuple(b), tuple(c)
    assert M.op(M.op(a, b), c) == M.op(a, M.op(b, c))
    assert M.op(a, M.identity) == a


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), max_size=3),
       st.lists(st.integers(0, 1), max_size=3))
def test_free_word_associative(a, b, c):
    M = cat.monoid("free2")
    a, b, c = tuple(a), tuple(b), tuple(c)
    assert M.op(M.op(a, b), c) == M.op(a, M.op(b, c)) == a + b + c
