"""Finite simplicial sets: canonical spaces, products, smash powers, quotients."""
from .core import (
    CellBudgetExceeded,
    GroupAction,
    OperatorWord,
    SimplicialSet,
    SimplicialSetError,
    trivial_action,
)
from .ops import (
    census,
    disjoint_union,
    glue,
    induced_action,
    orbit_quotient,
    orbit_quotient_with_map,
    product,
    product_power,
    product_with_keys,
    projection,
    quotient,
    quotient_with_map,
    smash,
    smash_power,
    suspension,
    symmetric_power,
    wedge,
)
from .spaces import minimal_sphere, point, rp2, standard_simplex, surface, torus, two_points
from .subdivision import barycentric_subdivision, sd_simplex_with_action
