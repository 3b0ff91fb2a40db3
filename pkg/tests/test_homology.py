from math import gcd, prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barytop.homology import (
    HomologyGroup,
    HomologyProfile,
    SparseMatrix,
    betti_mod_p,
    euler_from_census,
    integral_homology,
    normalized_chains,
    rank_mod_p,
    smith_normal_form,
)
from barytop.homology.chains import boundary_matrix
from barytop.homology.snf import (
    invariant_factors,
    is_unimodular,
    rank_and_torsion,
    sparse_diagonal,
    verify_certificate,
)
from barytop.sset import barycentric_subdivision, minimal_sphere, point, rp2, standard_simplex, torus
from barytop.symbolic import PoincareSeries

from conftest import profile, same


matrices = st.integers(1, 6).flatmap(lambda m: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n),
                       min_size=m, max_size=m)))


# -- chain complexes ---------------------------------------------------------

def test_chains_examples():
    C = normalized_chains(minimal_sphere(2))
    assert all(M.is_zero() for M in C.boundary)
    d1 = boundary_matrix(standard_simplex(1), 1)
    assert sorted(d1.columns[0].values()) == [-1, 1]
    assert smith_normal_form(d1).rank == 1
    T = torus()
    C = normalized_chains(T)
    ranks = [smith_normal_form(M).rank for M in C.boundary]
    chi = sum((-1) ** d * (C.ranks[d] - ranks[d] - (ranks[d + 1] if d + 1 < len(ranks) else 0))
              for d in range(len(C.ranks)))
    assert chi == 0


@pytest.mark.parametrize("name", ["S1", "S2", "T", "RP2", "C2"])
def test_d_squared(corpus, name):
    assert normalized_chains(corpus[name]).check_d_squared()
    assert normalized_chains(barycentric_subdivision(corpus[name])).check_d_squared()


def test_column_counts_match_census(corpus):
    X = corpus["C2"]
    C = normalized_chains(X)
    assert [M.ncols for M in C.boundary] == list(X.counts)


# -- Smith normal form -------------------------------------------------------

def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == (0, 0)
    assert smith_normal_form([[2, 0], [0, 2]]).diagonal == (2, 2)


def test_snf_certificates_example():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    res = smith_normal_form(M, certificates=True)
    assert res.diagonal == (2, 6, 12)
    assert verify_certificate(M, res)
    assert is_unimodular(res.U) and is_unimodular(res.V)


def test_snf_big_integers():
    big = 10 ** 30
    res = smith_normal_form([[big, 0], [0, big * 3]], certificates=True)
    assert res.diagonal == (big, 3 * big)
    assert verify_certificate([[big, 0], [0, big * 3]], res)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_certificate_property(M):
    res = smith_normal_form(M, certificates=True)
    assert verify_certificate(M, res)
    assert is_unimodular(res.U) and is_unimodular(res.V)
    nz = [d for d in res.diagonal if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    # zeros trail the nonzero entries
    assert list(res.diagonal[:len(nz)]) == nz


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_sparse_route_matches_dense(M):
    dense = smith_normal_form(M)
    rank, torsion = rank_and_torsion(SparseMatrix.from_dense(M))
    assert rank == dense.rank
    assert torsion == list(dense.invariant_factors)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_against_numpy(M):
    A = np.array(M, dtype=float)
    assert smith_normal_form(M).rank == np.linalg.matrix_rank(A)


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_against_snf(M, p):
    # rank over F_p is the number of invariant factors prime to p
    diag = smith_normal_form(M).diagonal
    expected = sum(1 for d in diag if d and d % p)
    assert rank_mod_p(SparseMatrix.from_dense(M), p) == expected


def test_invariant_factor_normalisation():
    assert invariant_factors([2, 3]) == [1, 6]
    assert invariant_factors([4, 6, 1, 0]) == [1, 2, 12]
    got = invariant_factors([12, 18, 8])
    assert prod(got) == 12 * 18 * 8 and all(b % a == 0 for a, b in zip(got, got[1:]))
    assert gcd(*got) == 2


def test_sparse_diagonal_product_of_minors():
    M = SparseMatrix.from_dense([[2, 1], [1, 2]])
    assert prod(sparse_diagonal(M)) == 3


# -- homology ----------------------------------------------------------------

def test_homology_examples():
    assert same(integral_homology(rp2()), profile({0: 1, 1: (0, (2,))}, 2))
    for k in (1, 2, 4):
        assert same(integral_homology(minimal_sphere(k)), profile({0: 1, k: 1}))


def test_truncation_flag():
    H = integral_homology(minimal_sphere(2), 5)
    assert H.truncated
    assert H[5].is_zero
    assert not integral_homology(minimal_sphere(2), 2).truncated


def test_betti_examples():
    assert betti_mod_p(rp2(), 2).coeffs == (1, 1, 1)
    assert betti_mod_p(rp2(), 3).coeffs == (1, 0, 0)
    assert betti_mod_p(torus(), 2).coeffs == (1, 2, 1)
    with pytest.raises(ValueError):
        betti_mod_p(torus(), 4)


def test_euler_examples():
    assert euler_from_census(point()) == 1
    assert euler_from_census(minimal_sphere(2)) == 2
    assert euler_from_census(torus()) == 0


@pytest.mark.parametrize("name", ["S1", "S2", "T", "RP2", "C2"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_universal_coefficients(corpus, name, p):
    X = corpus[name]
    H = integral_homology(X)
    b = betti_mod_p(X, p)
    assert b == H.betti_uct(p)
    assert b.euler() == H.euler() == euler_from_census(X)


def test_homology_invariant_under_relabeling():
    # reverse the cell ids in every dimension of the torus
    T = torus()
    flip = [list(reversed(range(c))) for c in T.counts]
    faces = [()] * T.counts[0]
    layers = [tuple(faces)]
    for d in range(1, len(T.counts)):
        layer = [None] * T.counts[d]
        for i, fs in enumerate(T.faces[d]):
            layer[flip[d][i]] = tuple((mask, flip[d - 1 - bin(mask).count("1")][t]) for mask, t in fs)
        layers.append(tuple(layer))
    from barytop.sset import SimplicialSet
    R = SimplicialSet(T.counts, tuple(layers), flip[0][T.basepoint])
    R.validate()
    assert integral_homology(R) == integral_homology(T)


# -- profiles and JSON -------------------------------------------------------

def test_group_validation():
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))
    with pytest.raises(ValueError):
        HomologyGroup(0, (1,))
    assert str(HomologyGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"


def test_profile_json_round_trip(corpus):
    for X in corpus.values():
        H = integral_homology(X)
        doc = H.to_json()
        assert set(doc[0]) == {"degree", "rank", "torsion"}
        assert HomologyProfile.from_json(doc) == HomologyProfile(H.groups)


def test_series_json_round_trip():
    s = PoincareSeries(2, (1, 0, 3))
    assert s.to_json() == {"p": 2, "coeffs": [1, 0, 3]}
    assert PoincareSeries.from_json(s.to_json()) == s
