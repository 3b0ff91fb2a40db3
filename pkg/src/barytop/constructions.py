"""Symmetric products, barycenter-space models and the spaces Q_{n,k}.

Two independent models of the barycenter space ``B_n(X)`` are provided:

* the *suspension* model ``SPbar^n(S X)``, whose reduced homology is that
  of ``B_n(X)`` raised by one degree;
* the *direct* model ``S^{n-1} ^_{S_n} X^(n)``: the subdivided simplex with
  its boundary collapsed, smashed with the smash power, divided by the
  diagonal action of the symmetric group.

For ``n = 2`` the symmetric join is also modelled as the double mapping
cylinder of ``X <- X^2 -> SP^2 X``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .homology import HomologyGroup, HomologyProfile, betti_mod_p, integral_homology
from .homology.profile import euler_from_census
from .sset import (
    SimplicialSet,
    SimplicialSetError,
    disjoint_union,
    induced_action,
    orbit_quotient,
    product_with_keys,
    quotient_with_map,
    sd_simplex_with_action,
    standard_simplex,
    suspension,
    symmetric_power,
)
from .sset.core import GroupAction, popcount, squeeze_mask
from .sset.ops import glue, smash_many_with_keys
from .symbolic.series import PoincareSeries


def symmetric_product(n: int, X: SimplicialSet, budget: int | None = None,
                      max_dim: int | None = None) -> SimplicialSet:
    """``SP^n X = X^n / S_n``."""
    if n < 1:
        raise SimplicialSetError("n must be >= 1")
    if n == 1:
        return X
    return symmetric_power(X, n, reduced=False, budget=budget, max_dim=max_dim)


def reduced_symmetric_product(n: int, X: SimplicialSet, budget: int | None = None,
                              max_dim: int | None = None) -> SimplicialSet:
    """``SPbar^n X = X^(n) / S_n``."""
    if n < 1:
        raise SimplicialSetError("n must be >= 1")
    if n == 1:
        return X
    return symmetric_power(X, n, reduced=True, budget=budget, max_dim=max_dim)


# ---------------------------------------------------------------------------


def _desuspend(profile: HomologyProfile, shift: int) -> HomologyProfile:
    if shift == 0:
        return profile
    red = profile.reduced().shifted(-shift)
    groups = list(red.groups) or [HomologyGroup()]
    groups[0] = HomologyGroup(groups[0].rank + 1, groups[0].torsion)
    return HomologyProfile(tuple(groups), profile.truncated, None)


@dataclass(frozen=True)
class BarycenterModel:
    """A simplicial set whose homology determines that of ``B_n(X)``.

    Reported homology in degree ``d`` is the model's reduced homology in
    degree ``d + degree_shift`` (plus ``Z`` in degree 0).
    """

    kind: str
    sset: SimplicialSet
    degree_shift: int
    n: int
    source: str = ""

    @property
    def top_degree(self) -> int:
        return self.sset.dim - self.degree_shift

    def homology(self, max_degree: int | None = None) -> HomologyProfile:
        top = None if max_degree is None else max_degree + self.degree_shift
        return _desuspend(integral_homology(self.sset, top), self.degree_shift)

    def betti(self, p: int, max_degree: int | None = None) -> PoincareSeries:
        top = None if max_degree is None else max_degree + self.degree_shift
        series = betti_mod_p(self.sset, p, top)
        if self.degree_shift:
            series = series.reduced().shift(-self.degree_shift).unreduced()
            if max_degree is not None:
                series = series.truncate(max_degree)
        return series

    def euler(self) -> int:
        """Euler characteristic of ``B_n(X)`` read off the model's census."""
        chi = euler_from_census(self.sset)
        return 2 - chi if self.degree_shift % 2 else chi


def barycenter_suspension_model(n: int, X: SimplicialSet, budget: int | None = None,
                                max_degree: int | None = None) -> BarycenterModel:
    """``SPbar^n`` of the reduced suspension; homology shifted by one.

    ``max_degree`` (a degree of ``B_n``) limits the skeleton that is built.
    """
    if n < 1:
        raise SimplicialSetError("n must be >= 1")
    SX = suspension(X, budget)
    max_dim = None if max_degree is None else max_degree + 2
    model = reduced_symmetric_product(n, SX, budget, max_dim)
    return BarycenterModel("suspension", model, 1, n, X.name)


def sphere_with_action(n: int):
    """``Delta^{n-1} / boundary`` (subdivided) with the permutation action of S_n."""
    sd, action, chains = sd_simplex_with_action(n - 1)
    full = frozenset(range(n))
    boundary = [(d, i) for d, layer in enumerate(chains) for i, ch in enumerate(layer)
                if ch[-1] != full]
    S, cellmap = quotient_with_map(sd, collapse=[boundary], name=f"S^{n - 1}")
    return S, induced_action(action, cellmap, S)


def barycenter_direct_model(n: int, X: SimplicialSet, budget: int | None = None,
                            max_degree: int | None = None) -> BarycenterModel:
    """``S^{n-1} ^_{S_n} X^(n)`` built as an orbit quotient."""
    if n < 1:
        raise SimplicialSetError("n must be >= 1")
    S, sphere_action = sphere_with_action(n)
    perms_list = list(permutations(range(n)))
    index = {p: g for g, p in enumerate(sphere_action.labels)}
    max_dim = None if max_degree is None else max_degree + 1
    P, keys = smash_many_with_keys([S] + [X] * n, budget, max_dim)

    def _permute(comps, p):
        out = [None] * len(comps)
        for i, c in enumerate(comps):
            out[p[i]] = c
        return tuple(out)

    # the sphere factor needs the degree of its cell, so build the permutations here
    perms = []
    kindex = [{k: i for i, k in enumerate(layer)} for layer in keys]
    for p in perms_list:
        per_s = sphere_action.perms[index[p]]
        per = []
        for m, layer in enumerate(keys):
            row = []
            for key in layer:
                if not key:
                    row.append(kindex[m][key])
                    continue
                mask, cell = key[0]
                c = m - popcount(mask)
                image = ((mask, per_s[c][cell]),) + _permute(key[1:], p)
                row.append(kindex[m][image])
            per.append(tuple(row))
        perms.append(tuple(per))
    action = GroupAction(tuple(perms), tuple(perms_list))
    Q = orbit_quotient(P, action, validate=n <= 3 and P.total_cells() < 200_000,
                       name=f"B_{n}({X.name or '?'}) direct")
    return BarycenterModel("direct", Q, 0, n, X.name)


def symjoin2_cylinder_model(X: SimplicialSet, budget: int | None = None) -> SimplicialSet:
    """Double mapping cylinder of ``X <-p2- X^2 -quotient-> SP^2 X``."""
    interval = standard_simplex(1)
    cyl, keys = product_with_keys([X, X, interval], budget)
    sp2, sp_keys = symmetric_power(X, 2, reduced=False, budget=budget, with_keys=True)
    target = disjoint_union(X, sp2, name="X + SP2")
    sp_index = [{k: i for i, k in enumerate(layer)} for layer in sp_keys]
    offset = [X.count(d) for d in range(len(target.counts))]

    attach = {}
    for d, layer in enumerate(keys):
        for cell, (a, b, t) in enumerate(layer):
            tmask, tv = t
            if d - popcount(tmask) != 0:
                continue
            if tv == 0:
                # end 0 goes to X through the second projection
                mask, y = b
                attach[(d, cell)] = (mask, y)
            else:
                common = a[0] & b[0]
                deg = d - popcount(common)
                pair = sorted([(squeeze_mask(d, a[0], common), a[1]),
                               (squeeze_mask(d, b[0], common), b[1])])
                attach[(d, cell)] = (common, offset[deg] + sp_index[deg][tuple(pair)])
    out = glue(cyl, target, attach, name=f"SJ2({X.name or '?'}) cylinder")
    return out


@dataclass(frozen=True)
class QProfile:
    n: int
    k: int
    profile: HomologyProfile
    truncated: bool = False


def infer_Q_homology(n: int, k: int, max_degree: int | None = None,
                     budget: int | None = None) -> QProfile:
    """Homology of ``Q_{n,k}`` from ``B_n(S^k)`` lowered by ``k + 1`` degrees."""
    from .sset import minimal_sphere
    if n < 2 or k < 1:
        raise SimplicialSetError("need n >= 2 and k >= 1")
    bound = (k + 1) * (n - 1) - 1
    top = bound if max_degree is None else max_degree
    truncated = top > bound
    top = min(top, bound)
    model = barycenter_suspension_model(n, minimal_sphere(k), budget)
    B = model.homology(top + k + 1)
    red = B.reduced().shifted(-(k + 1))
    groups = [red[d] for d in range(top + 1)]
    groups[0] = HomologyGroup(groups[0].rank + 1, groups[0].torsion)
    return QProfile(n, k, HomologyProfile(tuple(groups), truncated, max_degree), truncated)
