"""Denominators of the self and cross interaction kernels."""
import numpy

import gsqgpatch


def self_kernel_denominator(p, geometry, patch_index, x, y):
    """
    Scaled chord length ``|z_i(x) - z_i(y)|^alpha/(eps b_i)^alpha``.

    Equals ``(eta^2 (p(x)-p(y))^2 + 4 R(x) R(y) sin^2((x-y)/2))^(alpha/2)``
    with ``eta = eps |eps|^alpha b_i^(1+alpha)`` and ``R = 1 + eta p``.

    Args:
        p (gsqgpatch.CosineSeries):
            Perturbation of patch `patch_index`.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        x, y (float, numpy.ndarray):
            Target and source parameters; broadcast against each other.

    Returns:
        (float, numpy.ndarray):
            The denominator; zero where ``x = y``.

    Raises:
        DegenerateBoundaryError:
            If ``R_i(x)`` or ``R_i(y)`` is not positive.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
        >>> p = gsqgpatch.CosineSeries([0.0, 1.0])
        >>> round(float(gsqgpatch.self_kernel_denominator(
        ...     p, geometry, 1, 0.0, numpy.pi)), 12)
        2.02
        >>> float(gsqgpatch.self_kernel_denominator(p, geometry, 1, 1.0, 1.0))
        0.0

    """
    x, y = numpy.broadcast_arrays(numpy.asarray(x, dtype=float),
                                  numpy.asarray(y, dtype=float))
    eta = geometry.eta(patch_index)
    px, py = p(x), p(y)
    rx = gsqgpatch.check_radius(1+eta*px, patch_index)
    ry = gsqgpatch.check_radius(1+eta*py, patch_index)
    square = (eta*(px-py))**2+4*rx*ry*numpy.sin((x-y)/2)**2
    return square**(geometry.alpha/2)


def cross_kernel_denominator(p1, p2, geometry, patch_index, x, y):
    """
    Distance to the power ``alpha`` between the two boundaries.

    Target patch ``i`` is parameterized by `x`, source patch ``k = 3-i`` by
    `y`. In the frame of patch ``i`` the quantity is
    ``|eps b_k R_k(y) e^{iy} + eps b_i R_i(x) e^{ix} - d|^alpha``.

    Args:
        p1, p2 (gsqgpatch.CosineSeries):
            Perturbations of patch 1 and 2.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Target patch ``i``.
        x, y (float, numpy.ndarray):
            Target and source parameters.

    Returns:
        (float, numpy.ndarray):
            The denominator, bounded below by ``(d - 2 |eps| (b1+b2) max R)^alpha``.

    Raises:
        DegenerateBoundaryError:
            If a radial profile is not positive.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.1)
        >>> zero = gsqgpatch.CosineSeries.zeros(2)
        >>> value = gsqgpatch.cross_kernel_denominator(zero, zero, geometry, 1, 0.0, 0.0)
        >>> bool(numpy.isclose(value, 9.8**1.5))
        True

    """
    target, source = patch_index, 3-patch_index
    series = {1: p1, 2: p2}
    x, y = numpy.broadcast_arrays(numpy.asarray(x, dtype=float),
                                  numpy.asarray(y, dtype=float))
    rx = gsqgpatch.check_radius(gsqgpatch.radius_at(
        series[target], geometry, target, x), target)
    ry = gsqgpatch.check_radius(gsqgpatch.radius_at(
        series[source], geometry, source, y), source)
    offset = geometry.eps*(geometry.scale(source)*ry*numpy.exp(1j*y)+
                           geometry.scale(target)*rx*numpy.exp(1j*x))
    return numpy.abs(offset-geometry.d)**geometry.alpha
