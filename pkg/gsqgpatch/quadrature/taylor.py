"""Cancellation-free evaluation of ``((1 + h u)^(-k) - 1)/h``."""
import numpy


def power_increment(value, scale, exponent, taylor=False, nodes=16):
    """
    Difference quotient ``((1 + scale value)^(-exponent) - 1)/scale``.

    For small `scale` the quotient is formed from the integral form of the
    Taylor remainder,
    ``-exponent value int_0^1 (1 + t scale value)^(-exponent-1) dt``,
    evaluated with Gauss-Legendre nodes. Otherwise ``expm1``/``log1p`` are
    used. At ``scale = 0`` the limit ``-exponent value`` is returned.

    Args:
        value (numpy.ndarray):
            The quantity ``u``; ``1 + scale u`` must be positive.
        scale (float):
            The small parameter ``h``.
        exponent (float):
            The power ``k``.
        taylor (bool):
            Use the remainder integral.
        nodes (int):
            Gauss-Legendre nodes of the remainder integral.

    Returns:
        (numpy.ndarray):
            The quotient.

    Examples:
        >>> value = numpy.array([0.5, -0.25])
        >>> direct = gsqgpatch.power_increment(value, 1e-4, 0.75)
        >>> split = gsqgpatch.power_increment(value, 1e-4, 0.75, taylor=True)
        >>> bool(numpy.allclose(direct, split, rtol=1e-12, atol=0))
        True
        >>> gsqgpatch.power_increment(value, 0.0, 0.5).round(12)
        array([-0.25 ,  0.125])

    """
    value = numpy.asarray(value, dtype=float)
    if taylor or scale == 0:
        abscissas, weights = numpy.polynomial.legendre.leggauss(nodes)
        remainder = numpy.zeros_like(value)
        for abscissa, weight in zip((1+abscissas)/2, weights/2):
            remainder += weight*(1+abscissa*scale*value)**(-exponent-1)
        return -exponent*value*remainder
    return numpy.expm1(-exponent*numpy.log1p(scale*value))/scale
