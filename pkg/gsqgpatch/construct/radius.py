"""Radial profile of a perturbed patch."""
import numpy

import gsqgpatch


class DegenerateBoundaryError(ValueError):
    """A radial profile is not positive; the boundary is not star-shaped."""


def check_radius(radius, patch_index):
    """
    Verify that radial profile samples are finite and positive.

    Args:
        radius (numpy.ndarray):
            Samples of ``R_i``.
        patch_index (int):
            Patch the samples belong to, used in the message.

    Returns:
        (numpy.ndarray):
            The samples, unchanged.

    Raises:
        DegenerateBoundaryError:
            If any sample is not positive or not finite.

    """
    radius = numpy.asarray(radius, dtype=float)
    if not numpy.all(numpy.isfinite(radius)) or numpy.any(radius <= 0):
        raise DegenerateBoundaryError(
            "R_%d > 0 required; found min R_%d=%g" % (
                patch_index, patch_index, numpy.nanmin(radius)))
    return radius


def radius_at(p, geometry, patch_index, x):
    """``R_i`` at arbitrary points, by direct summation of `p`."""
    return 1+geometry.eta(patch_index)*p(x)


def radius_profile(p, geometry, patch_index, grid):
    """
    Radial profile ``R_i = 1 + eps |eps|^alpha b_i^(1+alpha) p_i``.

    The boundary of patch `patch_index` is the curve
    ``eps b_i R_i(x) (cos x, sin x)`` about the patch center. The signed
    factor ``eps |eps|^alpha`` gives negative ``eps`` its meaning.

    Args:
        p (gsqgpatch.CosineSeries):
            Perturbation of the patch.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2, selects ``b_i``.
        grid (gsqgpatch.CollocationGrid):
            Points to evaluate at.

    Returns:
        (numpy.ndarray):
            ``R_i`` at the grid points.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> p = gsqgpatch.CosineSeries([0.0, 1.0])
        >>> gsqgpatch.radius_profile(p, geometry, 1, grid)[:3].round(12)
        array([1.01, 1.  , 0.99])

    """
    return 1+geometry.eta(patch_index)*gsqgpatch.series_eval(p, grid)
