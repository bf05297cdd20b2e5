"""Newton iteration and continuation in eps."""
from .config import SolverConfig
from .newton import (
    newton_solve, NewtonError, MaxIterationsError, SingularJacobianError)
from .continuation import continue_branch, SCALING_QUANTITY
