"""Validation of pair geometries."""
import numpy


class GeometryError(ValueError):
    """Error related to invalid pair geometry."""

    def __init__(self, message, field=None):
        super(GeometryError, self).__init__(message)
        self.field = field


class ZeroCirculationError(GeometryError):
    """Total circulation vanishes where a co-rotating pair needs it not to."""


def check_geometry(geometry, mode=None):
    """
    Validate the standing assumptions on a pair geometry.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Geometry to validate.
        mode (Optional[str]):
            If "corotating", also require ``gamma1 + gamma2 != 0``.

    Raises:
        GeometryError:
            If a parameter is out of range. The `field` attribute names the
            offending parameter.
        ZeroCirculationError:
            If `mode` is "corotating" and the total circulation vanishes.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.5, gamma1=1.0, gamma2=-1.0)
        >>> gsqgpatch.check_geometry(geometry, mode="traveling")
        >>> gsqgpatch.check_geometry(geometry, mode="corotating")
        Traceback (most recent call last):
            ...
        gsqgpatch.construct.geometry.ZeroCirculationError: gamma1 + gamma2 != 0 required for corotating pairs; found gamma1=1, gamma2=-1

    """
    values = [geometry.alpha, geometry.eps, geometry.b1, geometry.b2,
              geometry.gamma1, geometry.gamma2, geometry.d]
    if not numpy.all(numpy.isfinite(values)):
        raise GeometryError("geometry parameters must be finite; found %s" % (
            values,))
    if not 0 < geometry.alpha < 2:
        raise GeometryError(
            "alpha in (0, 2) required; found %g" % geometry.alpha, "alpha")
    if not -0.5 < geometry.eps < 0.5:
        raise GeometryError(
            "eps in (-1/2, 1/2) required; found %g" % geometry.eps, "eps")
    for name, scale in (("b1", geometry.b1), ("b2", geometry.b2)):
        if scale <= 0:
            raise GeometryError("%s > 0 required; found %g" % (name, scale), name)
    if geometry.d <= 2*(geometry.b1+geometry.b2):
        raise GeometryError(
            "d > 2(b1+b2) required; found d=%g, b1=%g, b2=%g" % (
                geometry.d, geometry.b1, geometry.b2), "d")
    if mode == "corotating" and geometry.gamma1+geometry.gamma2 == 0:
        raise ZeroCirculationError(
            "gamma1 + gamma2 != 0 required for corotating pairs; "
            "found gamma1=%g, gamma2=%g" % (geometry.gamma1, geometry.gamma2),
            "gamma2")
