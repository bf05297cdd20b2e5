"""Relative equilibria of two point vortices."""
import gsqgpatch


def _total_circulation(geometry):
    total = geometry.gamma1+geometry.gamma2
    if total == 0:
        raise gsqgpatch.ZeroCirculationError(
            "gamma1 + gamma2 != 0 required for corotating pairs; "
            "found gamma1=%g, gamma2=%g" % (geometry.gamma1, geometry.gamma2),
            "gamma2")
    return total


def omega_star(geometry):
    """
    Angular velocity ``alpha C_alpha (gamma1+gamma2)/(2 d^(2+alpha))``.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Pair parameters; ``eps`` is not used.

    Returns:
        (float):
            Angular velocity of the co-rotating point-vortex pair.

    Raises:
        ZeroCirculationError:
            If ``gamma1 + gamma2 = 0``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, d=6.0)
        >>> bool(numpy.isclose(gsqgpatch.omega_star(geometry), 1/216))
        True
        >>> gsqgpatch.omega_star(gsqgpatch.PairGeometry(alpha=1.0, gamma2=-1.0))
        Traceback (most recent call last):
            ...
        gsqgpatch.construct.geometry.ZeroCirculationError: gamma1 + gamma2 != 0 required for corotating pairs; found gamma1=1, gamma2=-1

    """
    alpha = geometry.alpha
    return float(alpha*gsqgpatch.c_alpha(alpha)*_total_circulation(geometry)/
                 (2*geometry.d**(2+alpha)))


def xbar_star(geometry):
    """
    Rotation center ``d gamma2/(gamma1+gamma2)`` on the line of centers.

    Examples:
        >>> gsqgpatch.xbar_star(gsqgpatch.PairGeometry(alpha=1.5, gamma1=2.0, d=6.0))
        2.0

    """
    return float(geometry.d*geometry.gamma2/_total_circulation(geometry))


def u_star(geometry):
    """
    Speed ``alpha C_alpha gamma1/(2 d^(1+alpha))`` of the translating pair.

    Examples:
        >>> gsqgpatch.u_star(gsqgpatch.PairGeometry(alpha=1.0, d=5.0))
        0.02
        >>> gsqgpatch.u_star(gsqgpatch.PairGeometry(alpha=1.0, gamma1=0.0))
        0.0

    """
    alpha = geometry.alpha
    return float(alpha*gsqgpatch.c_alpha(alpha)*geometry.gamma1/
                 (2*geometry.d**(1+alpha)))
