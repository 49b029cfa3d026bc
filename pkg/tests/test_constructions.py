import numpy as np
import pytest

from ringlab import catalog as cat
from ringlab.constructions import (a_ring, b_ring, block_diagonal_embedding, canonical_inclusion,
                                   diagonal_embedding, direct_limit_chain, entry_projection,
                                   full_matrix, h3, radical_formula_check_H3,
                                   radical_formula_check_skew, radical_formula_check_Tn,
                                   s_ring, scalar_embedding, skew_poly_quotient_iso,
                                   skew_upper_triangular, t_ring, t_ring_convolution,
                                   upper_triangular)
from ringlab.radicals import lower_nilradical_msequence
from ringlab.rings import RingError, check_ring_axioms, direct_product, make_zmod

Z2, Z3, Z4 = make_zmod(2), make_zmod(3), make_zmod(4)


def endo(R, name):
    return cat.endomorphism(R, name)


def test_orders():
    assert upper_triangular(Z2, 2).order == 8
    M = full_matrix(Z2, 2)
    assert M.order == 16
    assert lower_nilradical_msequence(M) == {0}
    assert h3(Z2).order == 32
    assert t_ring(Z2, 2, endo(Z2, "id"), "id").order == 4
    assert a_ring(Z2, 4, endo(Z2, "id"), "id").order == 32
    assert b_ring(Z2, 4, endo(Z2, "id"), "id").order == 64


@pytest.mark.parametrize("name", cat.CATALOG_RINGS)
def test_catalog_constructions_are_rings(name):
    R = cat.ring(name)
    if R.order <= 64:
        assert check_ring_axioms(R) == []


@pytest.mark.parametrize("R,n", [(Z2, 2), (Z4, 2), (Z2, 3), (Z3, 2)])
def test_tn_formula(R, n):
    f = radical_formula_check_Tn(R, n)
    assert f.equal
    if R is Z4:
        assert len(f.oracle) == 16


@pytest.mark.parametrize("R", [Z2, Z3, Z4])
def test_h3_formula(R):
    assert radical_formula_check_H3(R).equal


@pytest.mark.parametrize("base,n,e", [("z2", 2, "id"), ("z2xz2", 2, "swap"), ("z4", 2, "id"),
                                      ("z3", 3, "id")])
def test_skew_formula(base, n, e):
    R = cat.ring(base)
    assert radical_formula_check_skew(R, n, endo(R, e)).equal


@pytest.mark.parametrize("R,n", [(Z2, 2), (Z2, 3), (Z4, 2)])
def test_identity_twist_matches_untwisted(R, n):
    assert skew_upper_triangular(R, n, endo(R, "id"), "id").same_tables(upper_triangular(R, n))


def test_swap_twist_rule():
    R = cat.ring("z2xz2")
    sw = endo(R, "swap")
    T = skew_upper_triangular(R, 2, sw, "swap")
    shape = T.structure
    e12 = np.zeros((2, 2), dtype=int)
    e12[0, 1] = R.one
    E12 = shape.index_of(e12)
    for r in R.elements:
        d = np.zeros((2, 2), dtype=int)
        d[0, 0] = d[1, 1] = r
        D = shape.index_of(d)
        d2 = np.zeros((2, 2), dtype=int)
        d2[0, 0] = d2[1, 1] = sw(r)
        assert T.mul[E12, D] == T.mul[shape.index_of(d2), E12]


def test_s_contains_t():
    S = s_ring(Z2, 3, endo(Z2, "id"), "id")
    T = t_ring(Z2, 3, endo(Z2, "id"), "id")
    s_mats = {S.structure.matrix(x).tobytes() for x in S.elements}
    assert all(T.structure.matrix(x).tobytes() in s_mats for x in T.elements)


@pytest.mark.parametrize("base,n,e", [("z2", 2, "id"), ("z4", 3, "id"), ("z2xz2", 2, "swap")])
def test_skew_poly_quotient_iso(base, n, e):
    R = cat.ring(base)
    assert skew_poly_quotient_iso(R, n, endo(R, e))


def test_t_ring_convolution():
    T = t_ring(Z2, 2, endo(Z2, "id"), "id")
    e = endo(Z2, "id")
    for x in T.elements:
        for y in T.elements:
            a = tuple(int(v) for v in T.structure.matrix(x)[0])
            b = tuple(int(v) for v in T.structure.matrix(y)[0])
            prod = tuple(int(v) for v in T.structure.matrix(int(T.mul[x, y]))[0])
            assert prod == t_ring_convolution(Z2, e, a, b)
            assert prod == ((a[0] * b[0]) % 2, (a[0] * b[1] + a[1] * b[0]) % 2)


def test_embeddings_are_homomorphisms():
    T = upper_triangular(Z4, 2)
    assert scalar_embedding(Z4, T).is_homomorphism()
    for p in range(2):
        assert entry_projection(T, p).is_homomorphism()
    T2, T4 = upper_triangular(Z2, 2), upper_triangular(Z2, 4)
    assert block_diagonal_embedding(T2, T4).is_homomorphism()
    assert canonical_inclusion(T2, full_matrix(Z2, 2)).is_injective()


def test_direct_limit_chains():
    P2 = direct_product([Z2, Z2])
    P4 = direct_product([P2, P2])
    rep = direct_limit_chain([Z2, P2, P4], [diagonal_embedding(Z2, P2), diagonal_embedding(P2, P4)])
    assert rep.transported
    assert all(s.classes["reduced"] and s.lower == 1 for s in rep.stages)
    T2, T4 = upper_triangular(Z2, 2), upper_triangular(Z2, 4)
    rep = direct_limit_chain([Z2, T2, T4], [block_diagonal_embedding(Z2, T2),
                                            block_diagonal_embedding(T2, T4)])
    assert rep.transported
    single = direct_limit_chain([Z4], [])
    assert single.stages[0].lower == len(lower_nilradical_msequence(Z4))


def test_direct_limit_rejects_bad_maps():
    P2 = direct_product([Z2, Z2])
    with pytest.raises(RingError):
        direct_limit_chain([Z2, P2], [])
