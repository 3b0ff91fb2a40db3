"""Evaluation of space expressions and the run configuration."""
from __future__ import annotations

from dataclasses import dataclass

from ..constructions import (
    BarycenterModel,
    barycenter_direct_model,
    barycenter_suspension_model,
    reduced_symmetric_product,
    symjoin2_cylinder_model,
    symmetric_product,
)
from ..homology.modp import is_prime
from ..sset import (
    SimplicialSet,
    minimal_sphere,
    point,
    product,
    rp2,
    smash,
    surface,
    suspension,
    torus,
    wedge,
)
from ..sset.ops import default_budget
from .parser import SpaceExpr

MODELS = ("suspension", "direct", "both")


@dataclass(frozen=True)
class RunConfig:
    max_degree: int | None = None
    p: int | None = None  # None means integral
    model: str = "suspension"
    budget: int | None = None
    fmt: str = "text"

    def __post_init__(self):
        if self.budget is None:
            object.__setattr__(self, "budget", default_budget())
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {', '.join(MODELS)}")
        if self.fmt not in ("text", "json"):
            raise ValueError("format must be text or json")
        if self.max_degree is not None and self.max_degree < 0:
            raise ValueError("max degree must be >= 0")


def build(e: SpaceExpr, cfg: RunConfig) -> SimplicialSet:
    """A simplicial set realizing ``e``.

    ``bary`` nested inside another constructor uses the direct model,
    which has the homotopy type of ``B_n`` itself.
    """
    b = cfg.budget
    op, a = e.op, e.args
    if op == "S":
        return minimal_sphere(a[0])
    if op == "pt":
        return point()
    if op == "RP2":
        return rp2()
    if op == "torus":
        return torus()
    if op == "surface":
        return surface(a[0])
    if op == "wedge":
        return wedge(build(a[0], cfg), build(a[1], cfg))
    if op == "prod":
        return product(build(a[0], cfg), build(a[1], cfg), b)
    if op == "smash":
        return smash(build(a[0], cfg), build(a[1], cfg), b)
    if op == "susp":
        return suspension(build(a[0], cfg), b)
    if op == "sp":
        return symmetric_product(a[0], build(a[1], cfg), b)
    if op == "rsp":
        return reduced_symmetric_product(a[0], build(a[1], cfg), b)
    if op == "bary":
        return barycenter_direct_model(a[0], build(a[1], cfg), b).sset
    if op == "symjoin2":
        return symjoin2_cylinder_model(build(a[0], cfg), b)
    raise ValueError(f"unknown constructor {op}")


def bary_models(e: SpaceExpr, cfg: RunConfig) -> list[BarycenterModel]:
    """The barycenter models selected by ``cfg.model`` for a top-level ``bary``."""
    n, inner = e.args
    X = build(inner, cfg)
    kinds = ["suspension", "direct"] if cfg.model == "both" else [cfg.model]
    out = []
    for kind in kinds:
        make = barycenter_suspension_model if kind == "suspension" else barycenter_direct_model
        out.append(make(n, X, cfg.budget, cfg.max_degree))
    return out
