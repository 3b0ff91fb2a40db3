"""Exact homology of finite simplicial sets."""
from .chains import ChainComplex, SparseMatrix, normalized_chains
from .modp import rank_mod_p
from .profile import (
    HomologyGroup,
    HomologyProfile,
    betti_mod_p,
    euler_from_census,
    integral_homology,
)
from .snf import SNFResult, smith_normal_form
