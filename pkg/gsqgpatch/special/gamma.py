"""Euler gamma function."""
import numpy
import scipy.special


class GammaPoleError(ValueError):
    """Gamma function evaluated at a pole."""


def gamma_fn(x):
    """
    Euler gamma function of a real argument.

    Args:
        x (float):
            Argument, not a nonpositive integer.

    Returns:
        (float):
            ``Gamma(x)``, accurate to double precision.

    Raises:
        GammaPoleError:
            If `x` is a nonpositive integer.

    Examples:
        >>> gsqgpatch.gamma_fn(1.0)
        1.0
        >>> bool(numpy.isclose(gsqgpatch.gamma_fn(0.5)**2, numpy.pi, rtol=1e-14))
        True
        >>> gsqgpatch.gamma_fn(-2.0)
        Traceback (most recent call last):
            ...
        gsqgpatch.special.gamma.GammaPoleError: gamma pole at nonpositive integer -2

    """
    x = float(x)
    if x <= 0 and x == numpy.round(x):
        raise GammaPoleError("gamma pole at nonpositive integer %g" % x)
    return float(scipy.special.gamma(x))


def signed_log_gamma(x):
    """
    Logarithm of ``|Gamma(x)|`` together with the sign of ``Gamma(x)``.

    Args:
        x (float, numpy.ndarray):
            Arguments away from the poles.

    Returns:
        (Tuple[numpy.ndarray, numpy.ndarray]):
            ``log|Gamma(x)|`` and ``sign(Gamma(x))``.

    """
    return scipy.special.gammaln(x), scipy.special.gammasgn(x)
