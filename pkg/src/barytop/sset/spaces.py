"""Canonical small models: simplices, minimal spheres, surfaces."""
from __future__ import annotations

from itertools import combinations
from math import comb

from .core import SimplicialSet, SimplicialSetError, full_mask, make_sset


def point() -> SimplicialSet:
    return make_sset([[()]], name="pt")


def standard_simplex(k: int) -> SimplicialSet:
    """Nondegenerate cells of Delta^k are the nonempty subsets of {0..k}."""
    if k < 0:
        raise SimplicialSetError("simplex dimension must be >= 0")
    subsets = [list(combinations(range(k + 1), d + 1)) for d in range(k + 1)]
    index = [{s: i for i, s in enumerate(layer)} for layer in subsets]
    layers = [[() for _ in subsets[0]]]
    for d in range(1, k + 1):
        layer = []
        for s in subsets[d]:
            layer.append(tuple((0, index[d - 1][s[:j] + s[j + 1:]]) for j in range(d + 1)))
        layers.append(layer)
    return make_sset(layers, name=f"Delta^{k}")


def minimal_sphere(k: int) -> SimplicialSet:
    """Delta^k / boundary: one vertex and one k-cell."""
    if k < 1:
        raise SimplicialSetError("minimal_sphere needs k >= 1; use two_points() for S^0")
    layers: list = [[()]] + [[] for _ in range(k - 1)]
    layers.append([tuple((full_mask(k - 1), 0) for _ in range(k + 1))])
    return make_sset(layers, name=f"S^{k}")


def two_points() -> SimplicialSet:
    """S^0, based at vertex 0."""
    return make_sset([[(), ()]], name="S^0")


def rp2() -> SimplicialSet:
    """One vertex, one edge ``a`` and one triangle with boundary ``a + a``."""
    return make_sset([[()], [((0, 0), (0, 0))], [((0, 0), (1, 0), (0, 0))]], name="RP2")


def torus() -> SimplicialSet:
    """Minimal torus: edges a, b, c (diagonal) and two triangles."""
    a, b, c = 0, 1, 2
    v = (0, 0)
    edges = [(v, v)] * 3
    # upper triangle: d0 = b, d1 = c, d2 = a ; lower: d0 = a, d1 = c, d2 = b
    tris = [((0, b), (0, c), (0, a)), ((0, a), (0, c), (0, b))]
    return make_sset([[()], edges, tris], name="T")


def polygon_surface(word: list[tuple[int, int]], name: str = "") -> SimplicialSet:
    """One-vertex surface from a polygon word.

    ``word`` lists the polygon sides as ``(edge, +1/-1)``.  The polygon is
    fan-triangulated from its first corner with diagonals oriented away from
    it; every edge is a loop at the single vertex.
    """
    n = len(word)
    if n < 3:
        raise SimplicialSetError("polygon needs at least 3 sides")
    n_edges = max(e for e, _ in word) + 1
    diag = {k: n_edges + (k - 2) for k in range(2, n - 1)}

    def side(k):
        # side k joins corners k and k+1 (corner n is corner 0)
        e, sgn = word[k]
        return e, (k, k + 1) if sgn > 0 else (k + 1, k)

    tris = []
    for k in range(1, n - 1):
        # triangle on corners 0, k, k+1
        arrows = {}
        if k == 1:
            e, (s, t) = side(0)
            arrows[frozenset((0, 1))] = (e, s, t)
        else:
            arrows[frozenset((0, k))] = (diag[k], 0, k)
        if k == n - 2:
            e, (s, t) = side(n - 1)
            s, t = (0 if s == n else s), (0 if t == n else t)
            arrows[frozenset((0, n - 1))] = (e, s, t)
        else:
            arrows[frozenset((0, k + 1))] = (diag[k + 1], 0, k + 1)
        e, (s, t) = side(k)
        arrows[frozenset((k, k + 1))] = (e, s, t)
        outdeg = {c: 0 for c in (0, k, k + 1)}
        for _, s, t in arrows.values():
            outdeg[s] += 1
        order = sorted(outdeg, key=lambda c: -outdeg[c])
        if sorted(outdeg.values()) != [0, 1, 2]:
            raise SimplicialSetError("fan triangle has cyclic edge orientations")
        fs = []
        for j in range(3):
            pair = [order[i] for i in range(3) if i != j]
            e, s, t = arrows[frozenset(pair)]
            assert (s, t) == tuple(pair)
            fs.append((0, e))
        tris.append(tuple(fs))
    n_all = n_edges + len(diag)
    edges = [((0, 0), (0, 0))] * n_all
    return make_sset([[()], edges, tris], name=name)


def surface(g: int) -> SimplicialSet:
    """Closed orientable surface of genus ``g`` (word a1 b1 a1^-1 b1^-1 ...)."""
    if g < 0:
        raise SimplicialSetError("genus must be >= 0")
    if g == 0:
        out = minimal_sphere(2)
        return SimplicialSet(out.counts, out.faces, 0, "C_0")
    word = []
    for i in range(g):
        a, b = 2 * i, 2 * i + 1
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return polygon_surface(word, name=f"C_{g}")


def expected_simplex_census(k: int) -> list[int]:
    return [comb(k + 1, d + 1) for d in range(k + 1)]
