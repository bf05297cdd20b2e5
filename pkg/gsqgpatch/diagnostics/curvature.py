"""Signed curvature of a patch boundary."""
import numpy

import gsqgpatch


def signed_curvature(p, geometry, patch_index, grid):
    """
    Signed curvature of the curve ``R(x) (cos x, sin x)``.

    ``kappa = (R^2 + 2 R'^2 - R R'')/(R^2 + R'^2)^(3/2)`` with
    ``R = 1 + eta p``. The physical boundary is this curve scaled by
    ``eps b_i``, and reflected for patch 2, so its curvature is
    ``kappa/(|eps| b_i)`` with the same sign.

    Args:
        p (gsqgpatch.CosineSeries):
            Perturbation of the patch.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        grid (gsqgpatch.CollocationGrid):
            Points to evaluate at.

    Returns:
        (numpy.ndarray):
            Curvature at the grid points.

    Raises:
        DegenerateBoundaryError:
            If ``R_i`` is not positive.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.2)
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> gsqgpatch.signed_curvature(
        ...     gsqgpatch.CosineSeries.zeros(2), geometry, 1, grid)
        array([1., 1., 1., 1., 1., 1., 1., 1.])

    """
    eta = geometry.eta(patch_index)
    radius = gsqgpatch.check_radius(
        gsqgpatch.radius_profile(p, geometry, patch_index, grid), patch_index)
    slope = eta*gsqgpatch.series_eval_deriv(p, grid)
    bend = eta*gsqgpatch.series_eval_deriv(p.derivative(), grid)
    return ((radius**2+2*slope**2-radius*bend)/
            (radius**2+slope**2)**1.5)
