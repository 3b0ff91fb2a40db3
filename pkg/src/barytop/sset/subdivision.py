"""Barycentric subdivision."""
from __future__ import annotations

from itertools import combinations, permutations

from .core import GroupAction, SimplicialSet, make_sset


def _chains(k: int):
    """Strict chains of nonempty subsets of {0..k}, grouped by length."""
    subsets = [frozenset(c) for r in range(1, k + 2) for c in combinations(range(k + 1), r)]
    by_dim = [[(s,) for s in subsets]]
    while True:
        nxt = [ch + (s,) for ch in by_dim[-1] for s in subsets if ch[-1] < s]
        if not nxt:
            break
        by_dim.append(nxt)
    return by_dim


def sd_simplex_with_action(k: int):
    """Nerve of the poset of nonempty subsets of {0..k} and its S_{k+1} action.

    The basepoint is the barycenter (the full set), which every
    permutation fixes.
    """
    by_dim = _chains(k)
    index = [{ch: i for i, ch in enumerate(layer)} for layer in by_dim]
    layers = [[() for _ in by_dim[0]]]
    for d in range(1, len(by_dim)):
        layers.append([
            tuple((0, index[d - 1][ch[:j] + ch[j + 1:]]) for j in range(d + 1))
            for ch in by_dim[d]
        ])
    X = make_sset(layers, basepoint=index[0][(frozenset(range(k + 1)),)], name=f"sd Delta^{k}")
    perms_list = list(permutations(range(k + 1)))
    perms = []
    for p in perms_list:
        per = []
        for d, layer in enumerate(by_dim):
            per.append(tuple(
                index[d][tuple(frozenset(p[i] for i in s) for s in ch)] for ch in layer
            ))
        perms.append(tuple(per))
    return X, GroupAction(tuple(perms), tuple(perms_list)), by_dim


def barycentric_subdivision(X: SimplicialSet) -> SimplicialSet:
    """``sd X``: one copy of each interior chain of ``sd Delta^c`` per ``c``-cell.

    A face that drops the top of a chain lands in the subdivision of a face
    of the cell; that face may be degenerate, in which case the chain is
    pushed forward along the degeneracy and repeated entries become
    degeneracies of the subdivided simplex.
    """
    top = X.dim
    interior = []  # interior[c]: chains of sd Delta^c ending in the full set, by length
    for c in range(top + 1):
        full = frozenset(range(c + 1))
        by_len = {}
        for layer in _chains(c):
            for ch in layer:
                if ch[-1] == full:
                    by_len.setdefault(len(ch) - 1, []).append(ch)
        interior.append(by_len)

    # cells of sd X in dimension m: (c, cell, chain) with chain of length m+1
    keys: list[list] = [[] for _ in range(top + 1)]
    for c in range(top + 1):
        for cell in X.cells(c):
            for m, chains in interior[c].items():
                for ch in chains:
                    keys[m].append((c, cell, ch))
    index = [{key: i for i, key in enumerate(layer)} for layer in keys]
    base = index[0][(0, X.basepoint, (frozenset([0]),))]

    def restrict(c, cell, subset):
        """The face of cell spanned by a vertex subset, as (mask, y, dim y)."""
        simplex, deg = (0, cell), c
        for v in sorted(set(range(c + 1)) - subset, reverse=True):
            simplex = X.face(deg, simplex, v)
            deg -= 1
        mask, y = simplex
        return mask, y, deg - bin(mask).count("1")

    def image_chain(chain, subset, mask):
        """Relabel chain inside ``subset`` and push it along the degeneracy."""
        order = sorted(subset)
        pos = {v: i for i, v in enumerate(order)}
        vals = [0]
        for t in range(len(order) - 1):
            vals.append(vals[-1] + (0 if mask >> t & 1 else 1))
        return [frozenset(vals[pos[v]] for v in s) for s in chain]

    layers = [[() for _ in keys[0]]]
    for m in range(1, top + 1):
        layer = []
        for c, cell, ch in keys[m]:
            fs = []
            for j in range(m + 1):
                sub = ch[:j] + ch[j + 1:]
                if j < m:
                    fs.append((0, index[m - 1][(c, cell, sub)]))
                    continue
                mask, y, e = restrict(c, cell, sub[-1])
                img = image_chain(sub, sub[-1], mask)
                flats = 0
                dedup = [img[0]]
                for t in range(1, len(img)):
                    if img[t] == img[t - 1]:
                        flats |= 1 << (t - 1)
                    else:
                        dedup.append(img[t])
                fs.append((flats, index[len(dedup) - 1][(e, y, tuple(dedup))]))
            layer.append(tuple(fs))
        layers.append(layer)
    return make_sset(layers, basepoint=base, name=f"sd {X.name or '?'}",
                     counts=[len(layer) for layer in keys])
