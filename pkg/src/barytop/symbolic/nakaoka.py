"""Mod-p Poincare series of symmetric products of spheres and of ``B_n(S^k)``.

Each series counts monomials in bigraded generators by total degree,
restricted to a total filtration.  Series include the class in degree 0,
so they compare directly with ``betti_mod_p`` of a connected model.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from ..homology.modp import is_prime
from .admissible import BigradedGenerator, mod2_generators
from .series import PoincareSeries


def monomial_table(generators: Iterable[BigradedGenerator], dmax: int,
                   fmax: int) -> list[list[int]]:
    """``table[f][d]``: number of monomials of filtration ``f`` and degree ``d``."""
    table = [[0] * (dmax + 1) for _ in range(fmax + 1)]
    table[0][0] = 1
    for g in generators:
        if g.degree > dmax or g.filtration > fmax:
            continue
        if g.exterior:
            for f in range(fmax, g.filtration - 1, -1):
                src, dst = table[f - g.filtration], table[f]
                for d in range(dmax, g.degree - 1, -1):
                    dst[d] += src[d - g.degree]
        else:
            for f in range(g.filtration, fmax + 1):
                src, dst = table[f - g.filtration], table[f]
                for d in range(g.degree, dmax + 1):
                    dst[d] += src[d - g.degree]
    return table


def _exact(table, f: int, p: int, dmax: int) -> PoincareSeries:
    """Monomials of exact filtration ``f`` plus the unit in degree 0."""
    coeffs = list(table[f]) if f < len(table) else [0] * (dmax + 1)
    if f:
        coeffs[0] += 1
    return PoincareSeries(p, tuple(coeffs))


def _circle_sp(n: int, reduced: bool, dmax: int) -> PoincareSeries:
    # SP^n S^1 is a circle, so SPbar^n S^1 is acyclic for n >= 2
    if reduced and n >= 2:
        return PoincareSeries.unit(2, dmax)
    return PoincareSeries.from_dict(2, dmax, {0: 1, 1: 1})


def rsp_sphere_series_mod2(n: int, k: int, dmax: int) -> PoincareSeries:
    """Mod-2 Betti numbers of ``SPbar^n S^k``: monomials of exact filtration ``n``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k == 1:
        return _circle_sp(n, True, dmax)
    table = monomial_table(mod2_generators(k, dmax), dmax, n)
    return _exact(table, n, 2, dmax)


def sp_sphere_series_mod2(n: int, k: int, dmax: int) -> PoincareSeries:
    """Mod-2 Betti numbers of ``SP^n S^k``: monomials of filtration at most ``n``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k == 1:
        return _circle_sp(n, False, dmax)
    table = monomial_table(mod2_generators(k, dmax), dmax, n)
    coeffs = [sum(table[f][d] for f in range(n + 1)) for d in range(dmax + 1)]
    return PoincareSeries(2, tuple(coeffs))


def desuspend(series: PoincareSeries, dmax: int) -> PoincareSeries:
    """Lower reduced degrees by one (inverse of the formal suspension)."""
    return series.reduced().shift(-1).truncate(dmax).unreduced()


def barycenter_sphere_series_mod2(n: int, k: int, dmax: int) -> PoincareSeries:
    """Mod-2 Betti numbers of ``B_n(S^k)`` from ``SPbar^n S^{k+1}``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return desuspend(rsp_sphere_series_mod2(n, k + 1, dmax + 1), dmax)


def s2_generators_modp(p: int, dmax: int) -> list[BigradedGenerator]:
    """Generators for ``SP(S^3)`` mod an odd prime, as used for ``B_n(S^2)``.

    Exterior: ``iota`` (3, 1) and ``h_i`` (2p^i + 1, p^i); polynomial:
    ``b_i`` (2p^i + 2, p^i), for ``i >= 1``.
    """
    gens = [BigradedGenerator(3, 1, "iota", exterior=True)]
    q = p
    while 2 * q + 1 <= dmax:
        gens.append(BigradedGenerator(2 * q + 1, q, f"h({2 * q + 1},{q})", exterior=True))
        gens.append(BigradedGenerator(2 * q + 2, q, f"b({2 * q + 2},{q})"))
        q *= p
    return gens


def barycenter_s2_series_modp(n: int, p: int, dmax: int) -> PoincareSeries:
    """Mod-p Betti numbers of ``B_n(S^2)`` for an odd prime ``p``."""
    if p == 2:
        raise ValueError("p = 2: use barycenter_sphere_series_mod2")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    table = monomial_table(s2_generators_modp(p, dmax + 1), dmax + 1, n)
    return desuspend(_exact(table, n, p, dmax + 1), dmax)


def barycenter_sphere_large_p(n: int, k: int, p: int,
                              dmax: int | None = None) -> PoincareSeries:
    """``B_n(S^k)`` mod ``p > n > 1``: one class at ``n(k+1)-1`` when ``k`` is odd."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not p > n > 1:
        raise ValueError("need p > n > 1")
    top = n * (k + 1) - 1
    if dmax is None:
        dmax = top
    dims = {0: 1}
    if k % 2:
        dims[top] = dims.get(top, 0) + 1
    return PoincareSeries.from_dict(p, dmax, dims)


def rsp_wedge_series(n: int, parts: Sequence[Sequence[PoincareSeries]]) -> PoincareSeries:
    """Series of ``SPbar^n`` of a wedge from the series of each ``SPbar^r X_i``.

    ``parts[i][r]`` is the (unreduced) series of ``SPbar^r X_i`` for
    ``r = 0..n``; entry 0 must be the unit series.  Smash products
    multiply reduced series.
    """
    if not parts:
        raise ValueError("no parts")
    for i, fam in enumerate(parts):
        if len(fam) < n + 1:
            raise ValueError(f"part {i} lacks SPbar^r series for r up to {n}")
    p, dmax = parts[0][0].p, min(s.dmax for fam in parts for s in fam[: n + 1])
    unit = PoincareSeries.unit(p, dmax)
    total = PoincareSeries.zero(p, dmax)

    def reduced(i, r):
        s = parts[i][r].truncate(dmax)
        return s if r == 0 else s.reduced()

    def compositions(k, m):
        if k == 1:
            yield (m,)
            return
        for r in range(m + 1):
            for rest in compositions(k - 1, m - r):
                yield (r,) + rest

    for comp in compositions(len(parts), n):
        term = unit
        for i, r in enumerate(comp):
            term = term * reduced(i, r)
        total = total + term
    return total.unreduced() if n else total
