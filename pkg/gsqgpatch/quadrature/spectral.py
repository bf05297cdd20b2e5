"""Product integration against the exact moments of the singular weight."""
import functools

import numpy

import gsqgpatch
from .common import implements, SingularRule


@functools.lru_cache(maxsize=64)
def _spectral_weights(alpha, size):
    moments = gsqgpatch.singular_moments(alpha, size//2)
    index = numpy.arange(size)
    weights = numpy.fft.ifft(-moments[numpy.minimum(index, size-index)]).real
    weights.setflags(write=False)
    return weights


@implements("spectral")
def spectral_rule(alpha, size, config):
    """
    Integrate the trigonometric interpolant of ``G`` exactly.

    With ``G`` sampled at ``s_m = 2 pi m/M`` and ``G(0) = 0``, the mean of
    ``G(s)|2 sin(s/2)|^(-alpha)`` is ``-sum_k G_k S_|k|`` in terms of the
    discrete Fourier coefficients ``G_k`` and `singular_moments`. The
    resulting weights are ``-(1/M) sum_k S_|k| exp(i k s_m)``.

    Args:
        alpha (float):
            Weight exponent.
        size (int):
            Number of nodes ``M``.
        config (gsqgpatch.QuadratureConfig):
            Unused beyond dispatch.

    Returns:
        (gsqgpatch.quadrature.common.SingularRule):
            Grid-aligned rule, spectrally accurate for smooth ``G``.

    """
    del config
    nodes = 2*numpy.pi*numpy.arange(size)/size
    return SingularRule(nodes, _spectral_weights(alpha, size), True)
