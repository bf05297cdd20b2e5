"""Construction, validation and evaluation of the basic types."""
from .geometry import check_geometry, GeometryError, ZeroCirculationError
from .grid import check_grid, GridError
from .evaluate import series_eval, series_eval_deriv
from .project import project_to_sine, parity_leak, ParityWarning
from .radius import (
    radius_profile, radius_at, check_radius, DegenerateBoundaryError)
from .state import trivial_state
