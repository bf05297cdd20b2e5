"""Checks of converged states and branches."""
from .record import Diagnostics
from .curvature import signed_curvature
from .convexity import convexity_check, ConvexityReport
from .scaling import scaling_fit, ScalingFit, InsufficientDataError
from .reflection import reflect_state, reflection_check, ReflectionReport
from .symmetric import symmetric_reduction_check, SymmetryReport
from .report import branch_report
