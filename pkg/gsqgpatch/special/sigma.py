"""Spectral multipliers of the linearized self-interaction."""
import dataclasses

import numpy
import scipy.special

import gsqgpatch

NORMALIZATIONS = {}


def normalization(name):
    """Register a multiplier normalization."""
    def decorator(func):
        """Register function."""
        NORMALIZATIONS[name] = func
        return func
    return decorator


def _odd_harmonic(modes):
    """Partial sums ``sum_{i<=j} 1/(2i-1)``."""
    return numpy.cumsum(1./(2*numpy.arange(1, numpy.max(modes)+1)-1))[modes-1]


def _printed_bracket(alpha, modes, method):
    """``2^alpha K (g_0 - g_j)`` with ``g_j = Gamma(j+a)/Gamma(j+1-a)``."""
    half = alpha/2
    if method == "gamma":
        gamma = scipy.special.gamma
        factor = gamma(1-alpha)/(gamma(half)*gamma(1-half))
        bracket = gamma(half)/gamma(1-half)-gamma(modes+half)/gamma(modes+1-half)
        return 2**alpha*factor*bracket
    assert method == "loggamma", method
    log_gamma, sign = gsqgpatch.signed_log_gamma(1-alpha)
    log_factor = log_gamma-(gsqgpatch.signed_log_gamma(half)[0]+
                            gsqgpatch.signed_log_gamma(1-half)[0])
    head = gsqgpatch.signed_log_gamma(half)[0]-gsqgpatch.signed_log_gamma(1-half)[0]
    tail = (gsqgpatch.signed_log_gamma(modes+half)[0]-
            gsqgpatch.signed_log_gamma(modes+1-half)[0])
    # g_0 - g_j = g_0 (1 - exp(tail - head)); g_0 > 0
    bracket_sign = numpy.sign(-numpy.expm1(tail-head))
    log_bracket = head+numpy.log(numpy.abs(numpy.expm1(tail-head)))
    return 2**alpha*sign*bracket_sign*numpy.exp(log_factor+log_bracket)


@normalization("raw")
def _raw(alpha, modes, method):
    if alpha == 1:
        return 8*_odd_harmonic(modes)
    return _printed_bracket(alpha, modes, method)


@normalization("two_over_pi")
def _two_over_pi(alpha, modes, method):
    if alpha == 1:
        return 2/numpy.pi*_odd_harmonic(modes)
    return 2*numpy.pi*_printed_bracket(alpha, modes, method)


@normalization("contour")
def _contour(alpha, modes, method):
    del method
    moments = gsqgpatch.singular_moments(alpha, int(numpy.max(modes)))
    return gsqgpatch.c_alpha(alpha)*(moments[modes]-moments[1])


def sigma_j(alpha, j, normalization="contour", method="loggamma"):
    """
    Multiplier ``sigma_j`` of the trivial-state self-interaction.

    Three normalizations are available:

    ``contour``
        ``C_alpha (S_j - S_1)`` with `singular_moments`. The self-interaction
        of a unit disk maps ``cos(jx)`` to ``-gamma j sigma_j sin(jx)``
        exactly in this normalization; ``sigma_1 = 0``.
    ``raw``
        ``sum_{i<=j} 8/(2i-1)`` at ``alpha = 1``, otherwise
        ``2^alpha Gamma(1-alpha)/(Gamma(alpha/2)Gamma(1-alpha/2))
        (Gamma(alpha/2)/Gamma(1-alpha/2) - Gamma(j+alpha/2)/Gamma(j+1-alpha/2))``.
    ``two_over_pi``
        ``(2/pi) sum_{i<=j} 1/(2i-1)`` at ``alpha = 1``, otherwise ``2 pi``
        times the ``raw`` value.

    Args:
        alpha (float):
            Kernel exponent in ``(0, 2)``.
        j (int, numpy.ndarray):
            Mode number(s), at least 1.
        normalization (str):
            One of "contour", "raw", "two_over_pi".
        method (str):
            "loggamma" (default) or "gamma"; how Gamma ratios are formed in
            the printed normalizations. The direct form overflows for
            ``j`` near 170.

    Returns:
        (float, numpy.ndarray):
            The multiplier(s).

    Raises:
        AlphaDomainError:
            If `alpha` is outside ``(0, 2)``.

    Examples:
        >>> gsqgpatch.sigma_j(1.0, 1, normalization="raw")
        8.0
        >>> round(gsqgpatch.sigma_j(1.0, 2, normalization="raw"), 12)
        10.666666666667
        >>> round(gsqgpatch.sigma_j(1.0, 2), 8)
        0.21220659
        >>> gsqgpatch.sigma_j(1.0, 1)
        0.0

    """
    gsqgpatch.check_alpha(alpha)
    assert normalization in NORMALIZATIONS, normalization
    modes = numpy.asarray(j, dtype=int)
    assert numpy.all(modes >= 1), modes
    # Gamma(1-alpha) has poles only at alpha = 1, handled separately.
    assert alpha == 1 or not float(1-alpha).is_integer(), alpha
    values = NORMALIZATIONS[normalization](alpha, numpy.atleast_1d(modes), method)
    if modes.ndim == 0:
        return float(values[0])
    return values


@dataclasses.dataclass(frozen=True)
class MultiplierTable:
    """
    Multipliers ``sigma_1..sigma_N`` for one kernel exponent.

    Attributes:
        alpha (float):
            Kernel exponent.
        sigma (numpy.ndarray):
            ``sigma_j`` for ``j = 1..N``.
        normalization (str):
            Normalization the values are given in.

    """

    alpha: float
    sigma: numpy.ndarray
    normalization: str = "contour"

    def __getitem__(self, j):
        """Multiplier of mode ``j`` (1-based)."""
        return self.sigma[numpy.asarray(j)-1]

    @property
    def order(self):
        """Number of tabulated modes."""
        return len(self.sigma)


def multiplier_table(alpha, order, normalization="contour"):
    """
    Tabulate ``sigma_j`` for ``j = 1..order``.

    Raises:
        ValueError:
            If `order` is less than 1.

    Examples:
        >>> table = gsqgpatch.multiplier_table(1.5, 8)
        >>> bool(numpy.all(numpy.diff(table.sigma) > 0))
        True

    """
    if order < 1:
        raise ValueError("multiplier order must be at least 1; found %s" % order)
    sigma = numpy.array(sigma_j(alpha, numpy.arange(1, order+1), normalization))
    sigma.setflags(write=False)
    return MultiplierTable(alpha=alpha, sigma=sigma, normalization=normalization)
