"""Normalization constant of the generalized SQG kernel."""
import gsqgpatch


class AlphaDomainError(ValueError):
    """Kernel exponent outside of (0, 2)."""


def check_alpha(alpha):
    """Raise `AlphaDomainError` unless ``0 < alpha < 2``."""
    if not 0 < alpha < 2:
        raise AlphaDomainError("alpha in (0, 2) required; found %g" % alpha)


def c_alpha(alpha):
    """
    Kernel constant ``C_alpha = Gamma(alpha/2)/(2^(1-alpha) Gamma(1-alpha/2))``.

    Args:
        alpha (float):
            Kernel exponent in ``(0, 2)``.

    Returns:
        (float):
            The constant, finite and positive on ``(0, 2)``.

    Raises:
        AlphaDomainError:
            If `alpha` is outside ``(0, 2)``.

    Examples:
        >>> gsqgpatch.c_alpha(1.0)
        1.0
        >>> expected = gsqgpatch.gamma_fn(0.75)*2**0.5/gsqgpatch.gamma_fn(0.25)
        >>> bool(numpy.isclose(gsqgpatch.c_alpha(1.5), expected, rtol=1e-14))
        True
        >>> gsqgpatch.c_alpha(2.0)
        Traceback (most recent call last):
            ...
        gsqgpatch.special.c_alpha.AlphaDomainError: alpha in (0, 2) required; found 2

    """
    check_alpha(alpha)
    return (gsqgpatch.gamma_fn(alpha/2)/
            (2**(1-alpha)*gsqgpatch.gamma_fn(1-alpha/2)))
