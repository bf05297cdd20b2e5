"""Fourier moments of the periodic singular weight."""
import numpy

import gsqgpatch


def singular_moments(alpha, count):
    """
    Moments ``S_k`` of the weight ``|2 sin(s/2)|^(-alpha)``.

    ``S_k`` is the mean over the circle of ``(1 - cos(k s))|2 sin(s/2)|^(-alpha)``,
    finite for ``alpha < 2`` even where the weight itself is not integrable.
    It is accumulated as

    ``S_k = Gamma(2-alpha)/(Gamma(alpha/2)Gamma(1-alpha/2))
    sum_{m<k} Gamma(m+alpha/2)/Gamma(m+2-alpha/2)``,

    which has no cancellation near ``alpha = 1``, where it reduces to
    ``(2/pi) sum_{i<=k} 1/(2i-1)``.

    Args:
        alpha (float):
            Kernel exponent in ``(0, 2)``.
        count (int):
            Largest mode ``K``.

    Returns:
        (numpy.ndarray):
            ``S_0, ..., S_K`` with ``S_0 = 0``.

    Examples:
        >>> moments = gsqgpatch.singular_moments(1.0, 3)
        >>> bool(numpy.allclose(moments*numpy.pi/2, [0, 1, 4/3, 23/15]))
        True

    """
    gsqgpatch.check_alpha(alpha)
    half = alpha/2
    modes = numpy.arange(count)
    log_prefactor = (
        gsqgpatch.signed_log_gamma(2-alpha)[0]-
        gsqgpatch.signed_log_gamma(half)[0]-
        gsqgpatch.signed_log_gamma(1-half)[0])
    log_terms = (gsqgpatch.signed_log_gamma(modes+half)[0]-
                 gsqgpatch.signed_log_gamma(modes+2-half)[0])
    return numpy.concatenate([
        [0.0], numpy.cumsum(numpy.exp(log_terms+log_prefactor))])
