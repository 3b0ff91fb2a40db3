from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barytop.homology import integral_homology
from barytop.sset import (
    CellBudgetExceeded,
    GroupAction,
    OperatorWord,
    SimplicialSet,
    SimplicialSetError,
    barycentric_subdivision,
    census,
    disjoint_union,
    glue,
    minimal_sphere,
    orbit_quotient,
    point,
    product,
    product_power,
    product_with_keys,
    quotient,
    rp2,
    sd_simplex_with_action,
    smash,
    smash_power,
    standard_simplex,
    surface,
    suspension,
    symmetric_power,
    torus,
    trivial_action,
    two_points,
    wedge,
)
from barytop.sset.spaces import expected_simplex_census
from barytop.verify import product_census

from conftest import profile, same


# -- canonical spaces --------------------------------------------------------

@pytest.mark.parametrize("k", range(0, 5))
def test_standard_simplex_binomial_census(k):
    X = standard_simplex(k)
    X.validate()
    assert census(X) == tuple(comb(k + 1, d + 1) for d in range(k + 1))
    assert list(census(X)) == expected_simplex_census(k)


def test_simplex_examples():
    assert census(standard_simplex(0)) == (1,)
    assert census(standard_simplex(1)) == (2, 1)
    assert census(standard_simplex(2)) == (3, 3, 1)


def test_minimal_sphere():
    assert census(minimal_sphere(1)) == (1, 1)
    assert census(minimal_sphere(2)) == (1, 0, 1)
    assert same(integral_homology(minimal_sphere(2)), profile({0: 1, 2: 1}))
    with pytest.raises(SimplicialSetError):
        minimal_sphere(0)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_sphere_homology(k):
    assert same(integral_homology(minimal_sphere(k)), profile({0: 1, k: 1}))


def test_surfaces():
    assert same(integral_homology(surface(0)), profile({0: 1, 2: 1}))
    assert same(integral_homology(torus()), profile({0: 1, 1: 2, 2: 1}))
    assert same(integral_homology(rp2()), profile({0: 1, 1: (0, (2,))}, 2))
    for g in range(4):
        X = surface(g)
        X.validate()
        assert same(integral_homology(X), profile({0: 1, 1: 2 * g, 2: 1}))


# -- products, smashes, wedges -----------------------------------------------

def test_product_examples():
    D1 = standard_simplex(1)
    assert census(product(D1, D1))[2] == 2
    S1 = minimal_sphere(1)
    assert same(integral_homology(product(S1, S1)), profile({0: 1, 1: 2, 2: 1}))
    for X in (torus(), rp2()):
        assert census(product(point(), X)) == census(X)


@pytest.mark.parametrize("a,b", [("S1", "S1"), ("S1", "S2"), ("T", "RP2"), ("S2", "T")])
def test_product_census_formula(corpus, a, b):
    X, Y = corpus[a], corpus[b]
    c = census(product(X, Y))
    assert c == product_census(census(X), census(Y))
    # top dimension is the pure shuffle count
    top = X.dim + Y.dim
    assert c[top] == X.count(X.dim) * Y.count(Y.dim) * comb(top, X.dim)


def test_smash_and_wedge():
    S1, S2 = minimal_sphere(1), minimal_sphere(2)
    assert same(integral_homology(smash(S1, S1)), profile({0: 1, 2: 1}))
    assert same(integral_homology(wedge(S1, S2)), profile({0: 1, 1: 1, 2: 1}))


def test_smash_power_circle():
    S, action = smash_power(minimal_sphere(1), 3)
    action.validate(S)
    assert S.count(3) == 6
    assert same(integral_homology(S), profile({0: 1, 3: 1}))


def test_suspension_examples():
    assert same(integral_homology(suspension(minimal_sphere(1))), profile({0: 1, 2: 1}))
    assert same(integral_homology(suspension(torus())), profile({0: 1, 2: 2, 3: 1}))
    assert same(integral_homology(suspension(rp2())), profile({0: 1, 2: (0, (2,))}, 3))


# -- quotients ---------------------------------------------------------------

def test_quotient_examples():
    D1 = standard_simplex(1)
    circle = quotient(D1, identify=[((0, 0), (0, 1))])
    assert same(integral_homology(circle), profile({0: 1, 1: 1}))
    assert quotient(torus()) == torus()
    P, keys = product_with_keys([D1, minimal_sphere(1)])
    groups = []
    for v in (0, 1):
        groups.append([(d, i) for d, layer in enumerate(keys) for i, (t, _) in enumerate(layer)
                       if d - bin(t[0]).count("1") == 0 and t[1] == v])
    S2 = quotient(P, collapse=groups)
    S2.validate()
    assert same(integral_homology(S2), profile({0: 1, 2: 1}))


def test_quotient_rejects_dimension_mismatch():
    with pytest.raises(SimplicialSetError):
        quotient(standard_simplex(1), identify=[((0, 0), (1, 0))])


def test_orbit_quotients():
    S2 = minimal_sphere(2)
    S, swap = smash_power(S2, 2)
    assert same(integral_homology(orbit_quotient(S, swap)), profile({0: 1, 4: 1}))
    assert orbit_quotient(torus(), trivial_action(torus())) == torus()
    S1 = minimal_sphere(1)
    P, act, _ = product_power(S1, 2)
    assert same(integral_homology(orbit_quotient(P, act)), profile({0: 1, 1: 1}))


@pytest.mark.parametrize("name,n,reduced", [
    ("S1", 2, False), ("S2", 2, False), ("S2", 3, False), ("S2", 2, True),
    ("T", 2, True), ("RP2", 2, False), ("S1", 3, True),
])
def test_fused_symmetric_power_matches_orbit_quotient(corpus, name, n, reduced):
    X = corpus[name]
    if reduced:
        big, action = smash_power(X, n)
    else:
        big, action, _ = product_power(X, n)
    generic = orbit_quotient(big, action)
    fused = symmetric_power(X, n, reduced=reduced)
    fused.validate()
    assert census(generic) == census(fused)
    assert integral_homology(generic) == integral_homology(fused)


def test_orbit_quotient_order_independent():
    # the two factor swaps of (X^2)^2 commute
    X = minimal_sphere(1)
    P, keys = product_with_keys([X, X, X, X])
    from barytop.sset.ops import permutation_action
    a = permutation_action(keys, [(0, 1, 2, 3), (1, 0, 2, 3)])
    b = permutation_action(keys, [(0, 1, 2, 3), (0, 1, 3, 2)])
    from barytop.sset import induced_action, orbit_quotient_with_map
    Qa, ma = orbit_quotient_with_map(P, a)
    Qab = orbit_quotient(Qa, induced_action(b, ma, Qa))
    Qb, mb = orbit_quotient_with_map(P, b)
    Qba = orbit_quotient(Qb, induced_action(a, mb, Qb))
    assert census(Qab) == census(Qba)
    assert integral_homology(Qab) == integral_homology(Qba)


def test_inconsistent_action_rejected():
    X = standard_simplex(1)
    bad = GroupAction((((0, 1), (0,)), ((1, 0), (0,))))
    with pytest.raises(SimplicialSetError):
        orbit_quotient(X, bad)


# -- subdivision -------------------------------------------------------------

def test_subdivision_examples():
    sd = barycentric_subdivision(standard_simplex(1))
    assert census(sd) == (3, 2)
    X, action, _ = sd_simplex_with_action(1)
    action.validate(X)
    swap = action.perms[1][0]
    fixed = [v for v in range(3) if swap[v] == v]
    assert len(fixed) == 1 and fixed[0] == X.basepoint


@pytest.mark.parametrize("name", ["S1", "S2", "T", "RP2"])
def test_subdivision_preserves_homology(corpus, name):
    X = corpus[name]
    sd = barycentric_subdivision(X)
    sd.validate()
    assert integral_homology(sd) == integral_homology(X)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_subdivided_simplex_action(k):
    X, action, _ = sd_simplex_with_action(k)
    action.validate(X)
    assert action.order == len(list(permutations(range(k + 1))))


# -- structure, JSON, budget -------------------------------------------------

@pytest.mark.parametrize("name", ["S1", "S2", "T", "RP2", "C2"])
def test_json_round_trip(corpus, name):
    X = corpus[name]
    text = X.to_json()
    Y = SimplicialSet.from_json(text)
    assert Y == X
    assert Y.to_json() == text


def test_json_round_trip_of_products():
    X = smash(torus(), rp2())
    assert SimplicialSet.from_json(X.to_json()).to_json() == X.to_json()


def test_all_constructions_validate(corpus):
    S1, T = corpus["S1"], corpus["T"]
    for X in (product(T, S1), smash(T, S1), wedge(T, S1), suspension(T),
              symmetric_power(T, 2), disjoint_union(T, two_points())):
        X.validate()


def test_glue_mapping_cylinder():
    # cone on S^1: glue the 0-end of S^1 x Delta^1 to a point
    S1 = minimal_sphere(1)
    P, keys = product_with_keys([S1, standard_simplex(1)])
    attach = {(d, i): ((1 << d) - 1, 0) for d, layer in enumerate(keys)
              for i, (_, t) in enumerate(layer) if d - bin(t[0]).count("1") == 0 and t[1] == 0}
    cone = glue(P, point(), attach)
    cone.validate()
    assert same(integral_homology(cone), profile({0: 1}))


def test_budget_exceeded():
    with pytest.raises(CellBudgetExceeded) as info:
        symmetric_power(torus(), 3, budget=100)
    assert info.value.census


def test_budget_env(monkeypatch):
    monkeypatch.setenv("BARYTOP_CELL_BUDGET", "50")
    with pytest.raises(CellBudgetExceeded):
        product(torus(), torus())


# -- operator words ----------------------------------------------------------

def test_operator_word_normal_form():
    assert OperatorWord().indices == ()
    with pytest.raises(SimplicialSetError):
        OperatorWord((0, 1))
    # s_i s_j = s_{j+1} s_i for i <= j
    assert OperatorWord.normalize([0, 1]) == OperatorWord((2, 0))
    assert OperatorWord.normalize([1, 1]) == OperatorWord((2, 1))
    assert OperatorWord.normalize([3, 0]) == OperatorWord((3, 0))


@given(st.lists(st.integers(0, 6), max_size=5))
def test_degeneracy_words_have_unique_normal_form(word):
    # s_i s_j = s_{j+1} s_i for i <= j: any word equals a strictly decreasing one
    w = OperatorWord.normalize(word)
    assert list(w.indices) == sorted(w.indices, reverse=True)
    assert OperatorWord.from_mask(w.mask) == w


_DELTA = standard_simplex(4)


@st.composite
def _degenerate_simplex(draw):
    d = draw(st.integers(0, 4))
    cell = draw(st.integers(0, _DELTA.count(d) - 1))
    extra = draw(st.integers(0 if d else 1, 3))
    m = d + extra
    flats = draw(st.sets(st.integers(0, m - 1), min_size=extra, max_size=extra)) if m else set()
    mask = sum(1 << t for t in flats)
    return m, (mask, cell)


@settings(max_examples=300)
@given(_degenerate_simplex(), st.data())
def test_faces_delete_vertices(simplex, data):
    # a simplex of Delta^4 is its (weakly increasing) vertex sequence
    m, x = simplex
    verts = _DELTA.vertices(m, x)
    assert list(verts) == sorted(verts)
    j = data.draw(st.integers(0, m))
    face = _DELTA.face(m, x, j)
    assert _DELTA.vertices(m - 1, face) == verts[:j] + verts[j + 1:]


@settings(max_examples=200)
@given(_degenerate_simplex(), st.data())
def test_simplicial_identity_on_degenerate_simplices(simplex, data):
    m, x = simplex
    if m < 2:
        return
    j = data.draw(st.integers(1, m))
    i = data.draw(st.integers(0, j - 1))
    lhs = _DELTA.face(m - 1, _DELTA.face(m, x, j), i)
    rhs = _DELTA.face(m - 1, _DELTA.face(m, x, i), j - 1)
    assert lhs == rhs
