"""Quadrature of mean values with weakly singular kernels."""
from .common import (
    QuadratureConfig, QuadratureConvergenceError, SingularRule, SCHEMES,
    self_weights, implements)
from .spectral import spectral_rule
from .subtraction import subtraction_rule
from .gauss_jacobi import gauss_jacobi_rule
from .mean import mean_integral, weight_mean
from .kernels import self_kernel_denominator, cross_kernel_denominator
from .taylor import power_increment
from .selftest import quadrature_selftest
