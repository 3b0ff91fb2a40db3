"""Constructions on finite simplicial sets.

Products are enumerated through Eilenberg-Zilber shuffles: a nondegenerate
``m``-simplex of ``X_1 x ... x X_n`` is a tuple of degree-``m`` simplices
whose degeneracy masks have empty intersection.  Smash products drop every
tuple with a component on the basepoint, and symmetric powers keep only
sorted tuples (one representative per orbit of the factor permutation).
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .core import (
    CellBudgetExceeded,
    GroupAction,
    Simplex,
    SimplicialSet,
    SimplicialSetError,
    compose_masks,
    full_mask,
    make_sset,
    popcount,
    squeeze_mask,
)
from .spaces import minimal_sphere

DEFAULT_CELL_BUDGET = 5_000_000


def default_budget() -> int:
    env = os.environ.get("BARYTOP_CELL_BUDGET")
    if env:
        value = int(env)
        if value <= 0:
            raise ValueError("BARYTOP_CELL_BUDGET must be positive")
        return value
    return DEFAULT_CELL_BUDGET


@lru_cache(maxsize=None)
def _masks(m: int, c: int) -> tuple[int, ...]:
    """All degeneracy masks taking degree ``m`` down to a ``c``-cell."""
    out = []
    for flats in combinations(range(m), m - c):
        mask = 0
        for t in flats:
            mask |= 1 << t
        out.append(mask)
    return tuple(out)


def simplices_of_degree(X: SimplicialSet, m: int, skip_basepoint: bool = False):
    """All degree-``m`` simplices of ``X`` as ``(mask, cell)``, sorted."""
    out = []
    for c in range(min(m, len(X.counts) - 1) + 1):
        for cell in X.cells(c):
            if skip_basepoint and c == 0 and cell == X.basepoint:
                continue
            for mask in _masks(m, c):
                out.append((mask, cell))
    out.sort()
    return out


def census(X: SimplicialSet) -> tuple[int, ...]:
    """Counts of nondegenerate cells by dimension."""
    counts = list(X.counts)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


# ---------------------------------------------------------------------------
# product engine


class _Tuples:
    """Interned tuple-keyed cells of a product-like simplicial set."""

    def __init__(self):
        self.keys: list[list[tuple]] = []
        self.index: list[dict] = []
        self.faces: list[list[tuple[Simplex, ...]]] = []

    def ensure(self, d):
        while len(self.keys) <= d:
            self.keys.append([])
            self.index.append({})
            self.faces.append([])

    def add(self, d, key, fs):
        self.ensure(d)
        self.index[d][key] = len(self.keys[d])
        self.keys[d].append(key)
        self.faces[d].append(fs)

    def total(self):
        return sum(len(k) for k in self.keys)

    def census(self):
        return [len(k) for k in self.keys]


def _power_engine(factors: Sequence[SimplicialSet], reduced: bool, symmetric: bool,
                  budget: int | None, max_dim: int | None, what: str):
    n = len(factors)
    if n == 0:
        raise SimplicialSetError("empty product")
    if symmetric and any(f is not factors[0] for f in factors):
        raise SimplicialSetError("symmetric power needs identical factors")
    budget = default_budget() if budget is None else budget
    dims = [f.dim for f in factors]
    top = sum(dims)
    if max_dim is not None:
        top = min(top, max_dim)
    bases = [f.basepoint for f in factors]
    out = _Tuples()
    out.ensure(0)
    if reduced:
        out.add(0, (), ())

    for m in range(top + 1):
        full = full_mask(m)
        lists = []
        for f in (factors[:1] if symmetric else factors):
            simp = simplices_of_degree(f, m, skip_basepoint=reduced)
            lists.append([(s, full & ~s[0]) for s in simp])
        if symmetric:
            lists = lists * n
        cap = [0] * (n + 1)
        for r in range(n - 1, -1, -1):
            cap[r] = cap[r + 1] + min(dims[r], m)
        found = []
        chosen = [None] * n
        base_total = out.total()

        def rec(r, start, covered):
            if r == n:
                if covered == full:
                    found.append(tuple(chosen))
                    if base_total + len(found) > budget:
                        raise CellBudgetExceeded(what, out.census() + [len(found)], budget)
                return
            if popcount(full & ~covered) > cap[r]:
                return
            lst = lists[r]
            for idx in range(start if symmetric else 0, len(lst)):
                s, jumps = lst[idx]
                chosen[r] = s
                rec(r + 1, idx, covered | jumps)

        rec(0, 0, 0)
        if not found:
            continue
        out.ensure(m)
        for key in found:
            fs = ()
            if m > 0:
                fs = tuple(
                    _tuple_face(factors, m, key, j, reduced, symmetric, bases, out)
                    for j in range(m + 1)
                )
            out.add(m, key, fs)
    return out


def _tuple_face(factors, m, key, j, reduced, symmetric, bases, out):
    comps = [f.face(m, s, j) for f, s in zip(factors, key)]
    if reduced:
        for (mask, cell), f, b in zip(comps, factors, bases):
            if cell == b and m - 1 - popcount(mask) == 0:
                return full_mask(m - 1), 0
    common = full_mask(m - 1)
    for mask, _ in comps:
        common &= mask
    if common:
        deg = m - 1 - popcount(common)
        comps = [(squeeze_mask(m - 1, mask, common), cell) for mask, cell in comps]
    else:
        deg = m - 1
    if symmetric:
        comps.sort()
    return common, out.index[deg][tuple(comps)]


def _finish(out: _Tuples, basepoint_key, name) -> SimplicialSet:
    base = out.index[0][basepoint_key]
    return make_sset(out.faces, basepoint=base, name=name, counts=out.census())


def product_with_keys(factors: Sequence[SimplicialSet], budget: int | None = None,
                      max_dim: int | None = None):
    """Degreewise product; also returns the component tuples of every cell."""
    out = _power_engine(factors, False, False, budget, max_dim, "product")
    name = " x ".join(f.name or "?" for f in factors)
    base = tuple((0, f.basepoint) for f in factors)
    return _finish(out, base, name), out.keys


def product(X: SimplicialSet, Y: SimplicialSet, budget: int | None = None,
            max_dim: int | None = None) -> SimplicialSet:
    return product_with_keys([X, Y], budget, max_dim)[0]


def projection(keys, r: int):
    """Projection onto factor ``r`` as a cell map ``cellmap[d][cell] -> simplex``."""
    return [[key[r] for key in layer] for layer in keys]


def smash_many_with_keys(factors: Sequence[SimplicialSet], budget: int | None = None,
                         max_dim: int | None = None):
    out = _power_engine(factors, True, False, budget, max_dim, "smash")
    name = " ^ ".join(f.name or "?" for f in factors)
    return _finish(out, (), name), out.keys


def smash(X: SimplicialSet, Y: SimplicialSet, budget: int | None = None,
          max_dim: int | None = None) -> SimplicialSet:
    """``X x Y`` with the wedge ``X v Y`` collapsed to the basepoint."""
    return smash_many_with_keys([X, Y], budget, max_dim)[0]


def _permute_key(key, p):
    out = [None] * len(key)
    for i, s in enumerate(key):
        out[p[i]] = s
    return tuple(out)


def permutation_action(keys, perms_list, transform=None) -> GroupAction:
    """Action on a tuple-keyed product by permuting components.

    ``transform(p, key)`` may further act on the permuted key (used for
    diagonal actions); ``perms_list`` must start with the identity.
    """
    index = [{k: i for i, k in enumerate(layer)} for layer in keys]
    perms = []
    for p in perms_list:
        per = []
        for d, layer in enumerate(keys):
            row = []
            for key in layer:
                image = transform(p, key) if transform else _permute_key(key, p)
                row.append(index[d][image])
            per.append(tuple(row))
        perms.append(tuple(per))
    return GroupAction(tuple(perms), tuple(perms_list))


def smash_power(X: SimplicialSet, n: int, budget: int | None = None,
                max_dim: int | None = None):
    """``X^(n)`` with the symmetric group permuting the smash factors."""
    if n < 1:
        raise SimplicialSetError("smash power needs n >= 1")
    S, keys = smash_many_with_keys([X] * n, budget, max_dim)
    S = SimplicialSet(S.counts, S.faces, S.basepoint, f"{X.name or '?'}^({n})")
    action = permutation_action(keys, list(permutations(range(n))))
    return S, action


def product_power(X: SimplicialSet, n: int, budget: int | None = None,
                  max_dim: int | None = None):
    """``X^n`` with the permutation action on factors."""
    P, keys = product_with_keys([X] * n, budget, max_dim)
    return P, permutation_action(keys, list(permutations(range(n)))), keys


def symmetric_power(X: SimplicialSet, n: int, reduced: bool = False,
                    budget: int | None = None, max_dim: int | None = None,
                    with_keys: bool = False):
    """Orbit quotient of ``X^n`` (or ``X^(n)``) by factor permutations.

    The quotient is built directly on sorted tuples, which are canonical
    orbit representatives, so the full product is never materialised.
    """
    if n < 1:
        raise SimplicialSetError("symmetric power needs n >= 1")
    what = "reduced symmetric product" if reduced else "symmetric product"
    out = _power_engine([X] * n, reduced, True, budget, max_dim, what)
    base = () if reduced else tuple((0, X.basepoint) for _ in range(n))
    label = ("SPbar" if reduced else "SP") + f"^{n}({X.name or '?'})"
    S = _finish(out, base, label)
    return (S, out.keys) if with_keys else S


# ---------------------------------------------------------------------------
# unions, wedges, suspension


def disjoint_union(X: SimplicialSet, Y: SimplicialSet, name: str = "") -> SimplicialSet:
    top = max(len(X.counts), len(Y.counts))
    counts, layers = [], []
    for d in range(top):
        off = [X.count(c) for c in range(top)]
        layer = list(X.faces[d]) if d < len(X.faces) else []
        if d < len(Y.faces):
            for fs in Y.faces[d]:
                layer.append(tuple((mask, t + off[d - 1 - popcount(mask)]) for mask, t in fs))
        counts.append(X.count(d) + Y.count(d))
        layers.append(layer)
    return make_sset(layers, basepoint=X.basepoint, name=name, counts=counts)


def wedge(X: SimplicialSet, Y: SimplicialSet) -> SimplicialSet:
    """One-point union along the basepoints."""
    top = max(len(X.counts), len(Y.counts))

    def remap(c, t):
        if c == 0:
            if t == Y.basepoint:
                return X.basepoint
            return X.count(0) + t - (1 if t > Y.basepoint else 0)
        return X.count(c) + t

    counts, layers = [], []
    for d in range(top):
        layer = list(X.faces[d]) if d < len(X.faces) else []
        if d < len(Y.faces):
            for cell, fs in enumerate(Y.faces[d]):
                if d == 0 and cell == Y.basepoint:
                    continue
                layer.append(tuple((mask, remap(d - 1 - popcount(mask), t)) for mask, t in fs))
        counts.append(X.count(d) + Y.count(d) - (1 if d == 0 else 0))
        layers.append(layer)
    return make_sset(layers, basepoint=X.basepoint,
                     name=f"{X.name or '?'} v {Y.name or '?'}", counts=counts)


def suspension(X: SimplicialSet, budget: int | None = None) -> SimplicialSet:
    """Reduced suspension ``S^1 ^ X``."""
    S = smash(minimal_sphere(1), X, budget)
    return SimplicialSet(S.counts, S.faces, S.basepoint, f"S({X.name or '?'})")


# ---------------------------------------------------------------------------
# quotients


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def is_subcomplex(X: SimplicialSet, cells: Iterable[tuple[int, int]]) -> bool:
    cells = set(cells)
    for d, c in cells:
        if d > 0:
            for mask, t in X.faces[d][c]:
                if (d - 1 - popcount(mask), t) not in cells:
                    return False
    return True


def quotient_with_map(X: SimplicialSet, identify: Iterable = (), collapse: Sequence = (),
                      name: str = ""):
    """Coequalizer of ``X`` by a cell relation and subcomplex collapses.

    ``identify`` holds pairs of cells ``((d, a), (d, b))`` to glue; faces of
    glued cells are glued as well.  Each entry of ``collapse`` is a
    subcomplex (iterable of ``(d, cell)``) sent to a fresh point; an empty
    entry adjoins a disjoint point.  When there is at least one collapse the
    first collapsed point becomes the basepoint, unless the old basepoint
    survives unaffected and ``collapse`` is empty.

    Returns the quotient and ``cellmap[d][cell] -> (mask, new cell)``.
    """
    uf = _UnionFind()
    for a, b in identify:
        if a[0] != b[0]:
            raise SimplicialSetError(f"cannot identify cells of dimensions {a[0]} and {b[0]}")
        uf.union(tuple(a), tuple(b))
    groups = [set(map(tuple, g)) for g in collapse]
    for g in groups:
        if not is_subcomplex(X, g):
            raise SimplicialSetError("collapsed set is not a subcomplex")

    # close the relation downward: glued cells must have glued faces
    changed = True
    while changed:
        changed = False
        members: dict = {}
        for key in list(uf.parent):
            members.setdefault(uf.find(key), []).append(key)
        for root, cells in members.items():
            d = root[0]
            if d == 0:
                continue
            ref = X.faces[d][root[1]]
            for other in cells:
                for (m1, t1), (m2, t2) in zip(ref, X.faces[d][other[1]]):
                    if m1 != m2:
                        raise SimplicialSetError(
                            "relation is not compatible with the degeneracies of faces"
                        )
                    c = d - 1 - popcount(m1)
                    if uf.union((c, t1), (c, t2)):
                        changed = True

    # collapse groups absorb whole classes
    group_of = {}
    gu = _UnionFind()
    for gi, g in enumerate(groups):
        gu.find(gi)
        for cell in g:
            r = uf.find(cell)
            if r in group_of:
                gu.union(group_of[r], gi)
            else:
                group_of[r] = gi
    for r in list(group_of):
        group_of[r] = gu.find(group_of[r])
    roots = sorted({gu.find(i) for i in range(len(groups))})

    top = len(X.counts)
    new_id: list[dict] = [dict() for _ in range(top)]
    counts = [0] * top
    point_of_group = {}
    for gi in roots:
        point_of_group[gi] = counts[0]
        counts[0] += 1
    for d in range(top):
        for c in X.cells(d):
            r = uf.find((d, c))
            if r in group_of:
                continue
            if r not in new_id[d]:
                new_id[d][r] = counts[d]
                counts[d] += 1

    def image(d, c):
        r = uf.find((d, c))
        if r in group_of:
            return full_mask(d), point_of_group[group_of[r]]
        return 0, new_id[d][r]

    layers = [[] for _ in range(top)]
    reps: list[dict] = [dict() for _ in range(top)]
    for d in range(top):
        for c in X.cells(d):
            r = uf.find((d, c))
            if r in group_of or r in reps[d]:
                continue
            reps[d][r] = c
    for d in range(1, top):
        order = sorted(reps[d].items(), key=lambda kv: new_id[d][kv[0]])
        for _, c in order:
            fs = []
            for mask, t in X.faces[d][c]:
                cdim = d - 1 - popcount(mask)
                im_mask, im = image(cdim, t)
                if im_mask:
                    fs.append((compose_masks(d - 1, mask, im_mask), im))
                else:
                    fs.append((mask, im))
            layers[d].append(tuple(fs))
    layers[0] = [() for _ in range(counts[0])]
    if groups:
        base = point_of_group[gu.find(0)]
    else:
        base = image(0, X.basepoint)[1]
    cellmap = [[image(d, c) for c in X.cells(d)] for d in range(top)]
    Q = make_sset(layers, basepoint=base, name=name or f"{X.name or '?'}/~", counts=counts)
    return Q, cellmap


def quotient(X: SimplicialSet, identify: Iterable = (), collapse: Sequence = (),
             name: str = "") -> SimplicialSet:
    return quotient_with_map(X, identify, collapse, name)[0]


def orbit_quotient_with_map(X: SimplicialSet, action: GroupAction, validate: bool = True,
                            name: str = ""):
    """Degreewise orbit set ``X / G`` with the induced faces."""
    if validate:
        action.validate(X)
    top = len(X.counts)
    rep = []
    for d in range(top):
        row = list(range(X.counts[d]))
        for per in action.perms:
            pd = per[d]
            for c in range(X.counts[d]):
                if pd[c] < row[c]:
                    row[c] = pd[c]
        rep.append(row)
    new_id = []
    counts = []
    for d in range(top):
        ids = {}
        for c in range(X.counts[d]):
            if rep[d][c] == c:
                ids[c] = len(ids)
        new_id.append(ids)
        counts.append(len(ids))
    layers = [[() for _ in range(counts[0])]]
    for d in range(1, top):
        layer = []
        for c in range(X.counts[d]):
            if rep[d][c] != c:
                continue
            layer.append(tuple(
                (mask, new_id[d - 1 - popcount(mask)][rep[d - 1 - popcount(mask)][t]])
                for mask, t in X.faces[d][c]
            ))
        layers.append(layer)
    cellmap = [[(0, new_id[d][rep[d][c]]) for c in range(X.counts[d])] for d in range(top)]
    base = new_id[0][rep[0][X.basepoint]]
    Q = make_sset(layers, basepoint=base, name=name or f"{X.name or '?'}/G", counts=counts)
    return Q, cellmap


def orbit_quotient(X: SimplicialSet, action: GroupAction, validate: bool = True,
                   name: str = "") -> SimplicialSet:
    return orbit_quotient_with_map(X, action, validate, name)[0]


def induced_action(action: GroupAction, cellmap, Q: SimplicialSet) -> GroupAction:
    """Push an action through a quotient map that respects it."""
    perms = []
    for per in action.perms:
        new = [[None] * Q.count(d) for d in range(len(Q.counts))]
        for d, layer in enumerate(cellmap):
            for c, (mask, t) in enumerate(layer):
                if mask:
                    continue
                mask2, t2 = cellmap[d][per[d][c]]
                if mask2:
                    raise SimplicialSetError("action does not preserve the collapsed part")
                prev = new[d][t]
                if prev is not None and prev != t2:
                    raise SimplicialSetError("action is not compatible with the quotient")
                new[d][t] = t2
        for d in range(len(new)):
            for t in range(len(new[d])):
                if new[d][t] is None:
                    new[d][t] = t
        perms.append(tuple(tuple(row) for row in new))
    return GroupAction(tuple(perms), action.labels)


def apply_map(X: SimplicialSet, m: int, simplex: Simplex, cellmap) -> Simplex:
    """Image of a degree-``m`` simplex under a cell map into another sset."""
    mask, cell = simplex
    c = m - popcount(mask)
    inner, target = cellmap[c][cell]
    return compose_masks(m, mask, inner), target


def glue(B: SimplicialSet, C: SimplicialSet, attach: dict, name: str = "") -> SimplicialSet:
    """Pushout of ``C <- A -> B`` along a subcomplex ``A`` of ``B``.

    ``attach`` maps every cell ``(d, cell)`` of ``A`` to its image simplex
    ``(mask, cell)`` of degree ``d`` in ``C``.  The result keeps all of
    ``C`` (same ids, same basepoint) and appends the cells of ``B`` outside
    ``A``; faces landing in ``A`` are rerouted through the attaching map.
    """
    if not is_subcomplex(B, attach.keys()):
        raise SimplicialSetError("attaching domain is not a subcomplex")
    top = max(len(B.counts), len(C.counts))
    new_id: list[dict] = [dict() for _ in range(top)]
    counts = [C.count(d) for d in range(top)]
    for d in range(top):
        for c in B.cells(d):
            if (d, c) not in attach:
                new_id[d][c] = counts[d]
                counts[d] += 1
    layers = [[() for _ in range(counts[0])]]
    for d in range(1, top):
        layer = list(C.faces[d]) if d < len(C.faces) else []
        for c in B.cells(d):
            if (d, c) in attach:
                continue
            fs = []
            for mask, t in B.faces[d][c]:
                cdim = d - 1 - popcount(mask)
                if (cdim, t) in attach:
                    inner, target = attach[(cdim, t)]
                    fs.append((compose_masks(d - 1, mask, inner), target))
                else:
                    fs.append((mask, new_id[cdim][t]))
            layer.append(tuple(fs))
        layers.append(layer)
    return make_sset(layers, basepoint=C.basepoint, name=name, counts=counts)
