"""Closed forms: Euler characteristics, admissible words, sphere series, splittings."""
from .admissible import (
    AdmissibleWord,
    BigradedGenerator,
    admissible_sequences,
    is_admissible,
    mod2_generators,
)
from .euler import euler_barycenter, euler_rsp, euler_sp
from .nakaoka import (
    barycenter_s2_series_modp,
    barycenter_sphere_large_p,
    barycenter_sphere_series_mod2,
    monomial_table,
    rsp_sphere_series_mod2,
    rsp_wedge_series,
    sp_sphere_series_mod2,
)
from .series import PoincareSeries
from .splitting import SplittingReport, Summand, b2_product_splitting, b2_surface_splitting
