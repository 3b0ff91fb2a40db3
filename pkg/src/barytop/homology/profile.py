"""Integral homology, mod-p Betti numbers and Euler characteristics."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..sset.core import SimplicialSet
from ..symbolic.series import PoincareSeries
from .chains import boundary_matrix
from .modp import is_prime, rank_mod_p
from .snf import rank_and_torsion


@dataclass(frozen=True)
class HomologyGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if any(q < 2 for q in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not in invariant-factor form")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{q}" for q in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyProfile:
    """``groups[d]`` for ``d = 0..len(groups)-1``; zero beyond.

    ``truncated`` is set when the requested range ran past the dimension
    of the model (the missing degrees are zero for that reason).
    """

    groups: tuple[HomologyGroup, ...]
    truncated: bool = False
    requested: int | None = field(default=None, compare=False)

    @classmethod
    def from_spec(cls, spec: dict[int, tuple], top: int) -> "HomologyProfile":
        """Build from ``{degree: (rank, (torsion...))}``; other degrees zero."""
        groups = []
        for d in range(top + 1):
            r, t = spec.get(d, (0, ()))
            groups.append(HomologyGroup(r, tuple(t)))
        return cls(tuple(groups))

    def __getitem__(self, d: int) -> HomologyGroup:
        if 0 <= d < len(self.groups):
            return self.groups[d]
        return HomologyGroup()

    @property
    def top(self) -> int:
        return len(self.groups) - 1

    def reduced(self) -> "HomologyProfile":
        g = list(self.groups)
        if g and g[0].rank > 0:
            g[0] = HomologyGroup(g[0].rank - 1, g[0].torsion)
        return HomologyProfile(tuple(g), self.truncated, self.requested)

    def shifted(self, k: int) -> "HomologyProfile":
        """Move degree d to degree d + k (k may be negative; drops below 0)."""
        n = len(self.groups)
        g = [HomologyGroup()] * max(n + k, 0)
        for d, grp in enumerate(self.groups):
            if 0 <= d + k < len(g):
                g[d + k] = grp
        return HomologyProfile(tuple(g), self.truncated, None)

    def restrict(self, top: int) -> "HomologyProfile":
        return HomologyProfile(tuple(self[d] for d in range(top + 1)), False, None)

    def same_as(self, other: "HomologyProfile", top: int | None = None) -> bool:
        if top is None:
            top = max(self.top, other.top)
        return all(self[d] == other[d] for d in range(top + 1))

    def euler(self) -> int:
        return sum((-1) ** d * g.rank for d, g in enumerate(self.groups))

    def betti_uct(self, p: int) -> PoincareSeries:
        """Mod-p Betti numbers predicted by universal coefficients."""
        out = []
        for d in range(len(self.groups)):
            b = self[d].rank + sum(1 for q in self[d].torsion if q % p == 0)
            b += sum(1 for q in self[d - 1].torsion if q % p == 0) if d > 0 else 0
            out.append(b)
        return PoincareSeries(p, tuple(out))

    def nonzero(self) -> dict[int, HomologyGroup]:
        return {d: g for d, g in enumerate(self.groups) if not g.is_zero}

    def to_json(self) -> list[dict]:
        return [{"degree": d, "rank": g.rank, "torsion": list(g.torsion)}
                for d, g in enumerate(self.groups)]

    @classmethod
    def from_json(cls, items: list[dict]) -> "HomologyProfile":
        top = max((it["degree"] for it in items), default=-1)
        spec = {it["degree"]: (it["rank"], tuple(it["torsion"])) for it in items}
        return cls.from_spec(spec, top)

    def __str__(self):
        return ", ".join(f"H{d}={g}" for d, g in self.nonzero().items()) or "0"


def _top_degree(X: SimplicialSet, max_degree):
    dim = X.dim
    if max_degree is None:
        return dim, False
    if max_degree > dim:
        return dim, True
    return max_degree, False


def integral_homology(X: SimplicialSet, max_degree: int | None = None) -> HomologyProfile:
    """``H_d(X; Z)`` for ``d = 0..max_degree`` (default: dimension of ``X``)."""
    top, truncated = _top_degree(X, max_degree)
    ranks, torsion = {}, {}
    for d in range(1, top + 2):
        if X.count(d) == 0 or X.count(d - 1) == 0:
            ranks[d], torsion[d] = 0, []
            continue
        ranks[d], torsion[d] = rank_and_torsion(boundary_matrix(X, d))
    ranks[0] = 0
    groups = []
    for d in range(top + 1):
        free = X.count(d) - ranks[d] - ranks[d + 1]
        groups.append(HomologyGroup(free, tuple(torsion[d + 1])))
    return HomologyProfile(tuple(groups), truncated, max_degree)


def betti_mod_p(X: SimplicialSet, p: int, max_degree: int | None = None) -> PoincareSeries:
    """``dim H_d(X; F_p)`` by rank computations over the prime field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    top, _ = _top_degree(X, max_degree)
    ranks = {0: 0}
    for d in range(1, top + 2):
        if X.count(d) == 0 or X.count(d - 1) == 0:
            ranks[d] = 0
        else:
            ranks[d] = rank_mod_p(boundary_matrix(X, d), p)
    coeffs = [X.count(d) - ranks[d] - ranks[d + 1] for d in range(top + 1)]
    if max_degree is not None and max_degree > top:
        coeffs += [0] * (max_degree - top)
    return PoincareSeries(p, tuple(coeffs))


def euler_from_census(X: SimplicialSet) -> int:
    return sum((-1) ** d * c for d, c in enumerate(X.counts))
