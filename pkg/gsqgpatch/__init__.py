# pylint: disable=wildcard-import
"""Gsqgpatch -- Asymmetric vortex-patch pairs for generalized SQG."""
from .baseclass import (
    PairGeometry,
    CosineSeries,
    SineSeries,
    CollocationGrid,
    SolveState,
    ResidualPair,
    BranchEntry,
    SolutionBranch,
    MODES,
    SCALAR_NAMES,
)

from .construct import *
from .special import *
from .quadrature import *
from .functional import *
from .linearization import *
from .diagnostics import *
from .solver import *
from .io import *
from .cli import main
