"""Rigid rotation term of the co-rotating residual."""
import numpy

import gsqgpatch


def eval_F_i1(state, geometry, patch_index, grid):
    """
    Rotation term ``F_i1`` at the collocation points.

    ``-Omega (|eps|^(2+alpha) b_i^(2+alpha) p_i'
    + ((-1)^i xbar - (i-1) d)(eta_i p_i' cos(x)/R_i - sin(x)))``.

    Args:
        state (gsqgpatch.SolveState):
            Co-rotating state ``(Omega, xbar, p1, p2)``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        grid (gsqgpatch.CollocationGrid):
            Collocation points.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Raises:
        DegenerateBoundaryError:
            If ``R_i`` is not positive.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, d=6.0)
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> zero = gsqgpatch.CosineSeries.zeros(2)
        >>> state = gsqgpatch.SolveState("corotating", 2.0, 1.5, zero, zero)
        >>> values = gsqgpatch.eval_F_i1(state, geometry, 1, grid)
        >>> bool(numpy.allclose(values, -3*numpy.sin(grid.points)))
        True
        >>> values = gsqgpatch.eval_F_i1(state, geometry, 2, grid)
        >>> bool(numpy.allclose(values, -9*numpy.sin(grid.points)))
        True

    """
    assert state.mode == "corotating", state.mode
    omega, xbar = state.scalar1, state.scalar2
    perturbation = state.perturbation(patch_index)
    eta = geometry.eta(patch_index)
    slope = eta*gsqgpatch.series_eval_deriv(perturbation, grid)
    radius = gsqgpatch.check_radius(
        gsqgpatch.radius_profile(perturbation, geometry, patch_index, grid),
        patch_index)
    lever = (-1)**patch_index*xbar-(patch_index-1)*geometry.d
    x = grid.points
    return -omega*(geometry.eps*geometry.scale(patch_index)*slope+
                   lever*(slope*numpy.cos(x)/radius-numpy.sin(x)))
