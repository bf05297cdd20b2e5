"""Linearized operators of the residual functionals."""
from .tangent import TrivialTangent
from .trivial import (
    trivial_apply, trivial_inverse, trivial_matrix, SingularBlockError)
from .jacobian import fd_jacobian, JacobianProbeError
from .gateaux import gateaux_self
