"""Gamma function, kernel constant and spectral multipliers."""
from .gamma import gamma_fn, signed_log_gamma, GammaPoleError
from .c_alpha import c_alpha, check_alpha, AlphaDomainError
from .moments import singular_moments
from .sigma import sigma_j, multiplier_table, MultiplierTable, NORMALIZATIONS
