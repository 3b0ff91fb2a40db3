"""Stable splittings of ``B_2`` of surfaces and of products, as series."""
from __future__ import annotations

from dataclasses import dataclass

from .series import PoincareSeries


@dataclass(frozen=True)
class Summand:
    """A wedge summand with its reduced mod-p series."""

    name: str
    multiplicity: int
    series: PoincareSeries


@dataclass(frozen=True)
class SplittingReport:
    summands: tuple[Summand, ...]
    p: int
    dmax: int

    def total(self) -> PoincareSeries:
        """Unreduced series of the wedge."""
        out = PoincareSeries.zero(self.p, self.dmax)
        for s in self.summands:
            out = out + s.series.truncate(self.dmax).scale(s.multiplicity)
        return out.unreduced()

    def to_json(self) -> dict:
        return {
            "summands": [{"name": s.name, "multiplicity": s.multiplicity,
                          "series": s.series.to_json()} for s in self.summands],
            "total": self.total().to_json(),
        }


def sphere_series(m: int, p: int, dmax: int) -> PoincareSeries:
    """Reduced series of ``S^m``."""
    return PoincareSeries.monomial(p, dmax, m)


def moore_rp2_series(m: int, p: int, dmax: int) -> PoincareSeries:
    """Reduced series of ``Sigma^m RP^2``: classes at ``m+1, m+2`` mod 2, none otherwise."""
    if p != 2:
        return PoincareSeries.zero(p, dmax)
    return PoincareSeries.from_dict(p, dmax, {m + 1: 1, m + 2: 1})


def b2_surface_splitting(g: int, p: int = 2, dmax: int = 6) -> SplittingReport:
    """``B_2(C_g)`` stably: ``(2g^2+g) S^3``, ``2g S^4`` and one ``Sigma^3 RP^2``.

    This is the desuspension of ``(S^4)^(2g^2+g) v (S^5)^(2g) v Sigma^4 RP^2``.
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    return SplittingReport((
        Summand("S^3", 2 * g * g + g, sphere_series(3, p, dmax)),
        Summand("S^4", 2 * g, sphere_series(4, p, dmax)),
        Summand("Sigma^3 RP^2", 1, moore_rp2_series(3, p, dmax)),
    ), p, dmax)


def b2_product_splitting(x: PoincareSeries, y: PoincareSeries, b2x: PoincareSeries,
                         b2y: PoincareSeries, b2xy: PoincareSeries) -> SplittingReport:
    """Six-term stable splitting of ``B_2(X x Y)`` over a field.

    All inputs are unreduced series of connected spaces: ``X``, ``Y``,
    ``B_2 X``, ``B_2 Y`` and ``B_2(X ^ Y)``.  Joins are suspended smash
    products, so their series are shifted products of reduced series.
    """
    p = x.p
    dmax = min(s.dmax for s in (x, y, b2x, b2y, b2xy))
    rx, ry = x.truncate(dmax).reduced(), y.truncate(dmax).reduced()
    terms = (
        ("B_2 X", b2x.truncate(dmax).reduced()),
        ("B_2 Y", b2y.truncate(dmax).reduced()),
        ("B_2 (X^Y)", b2xy.truncate(dmax).reduced()),
        ("X*Y", (rx * ry).shift(1)),
        ("X*X ^ Y", (rx * rx * ry).shift(1)),
        ("Y*Y ^ X", (ry * ry * rx).shift(1)),
    )
    return SplittingReport(tuple(Summand(n, 1, s) for n, s in terms), p, dmax)
