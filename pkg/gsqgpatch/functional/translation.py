"""Uniform translation term of the traveling residual."""
import numpy

import gsqgpatch


def eval_G_i1(state, geometry, patch_index, grid):
    """
    Translation term ``G_i1 = -U (sin(x) - eta_i p_i' cos(x)/R_i)``.

    Args:
        state (gsqgpatch.SolveState):
            Traveling state ``(U, gamma2, p1, p2)``.
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
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.2)
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> zero = gsqgpatch.CosineSeries.zeros(2)
        >>> state = gsqgpatch.SolveState("traveling", 0.5, 1.0, zero, zero)
        >>> values = gsqgpatch.eval_G_i1(state, geometry, 2, grid)
        >>> bool(numpy.allclose(values, -0.5*numpy.sin(grid.points)))
        True

    """
    assert state.mode == "traveling", state.mode
    perturbation = state.perturbation(patch_index)
    eta = geometry.eta(patch_index)
    slope = eta*gsqgpatch.series_eval_deriv(perturbation, grid)
    radius = gsqgpatch.check_radius(
        gsqgpatch.radius_profile(perturbation, geometry, patch_index, grid),
        patch_index)
    x = grid.points
    return -state.scalar1*(numpy.sin(x)-slope*numpy.cos(x)/radius)
