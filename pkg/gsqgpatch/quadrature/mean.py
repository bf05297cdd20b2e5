"""Mean value of periodic, possibly weakly singular, integrands."""
import dataclasses

import numpy

import gsqgpatch
from .common import DEFAULT_NODES, QuadratureConfig, QuadratureConvergenceError

# Symmetric offsets and weights extrapolating an even function of the
# offset to zero with error O(h^6).
LIMIT_OFFSETS = numpy.array([1., 2., 3.])*1e-3
LIMIT_WEIGHTS = numpy.array([1.5, -0.6, 0.1])


def _smooth_factor(func, singular_point, alpha, offsets):
    """``G = f |2 sin((y-y*)/2)|^alpha`` at ``y* + offsets``."""
    chord = numpy.abs(2*numpy.sin(offsets/2))
    with numpy.errstate(divide="ignore", invalid="ignore"):
        values = func(singular_point+offsets)*chord**alpha
    return numpy.where(chord > 0, values, 0.)


def _singular_limit(func, singular_point, alpha):
    """Extrapolated value ``G(y*)`` of the smooth factor."""
    offsets = numpy.concatenate([LIMIT_OFFSETS, -LIMIT_OFFSETS])
    values = _smooth_factor(func, singular_point, alpha, offsets)
    return float(LIMIT_WEIGHTS.dot((values[:3]+values[3:])/2))


def weight_mean(alpha):
    """
    Mean of the weight, ``mean(|2 sin(s/2)|^(-alpha)) = Gamma(1-alpha)/Gamma(1-alpha/2)^2``.

    Examples:
        >>> expected = gsqgpatch.gamma_fn(0.5)/gsqgpatch.gamma_fn(0.75)**2
        >>> bool(numpy.isclose(gsqgpatch.weight_mean(0.5), expected, rtol=1e-14))
        True
        >>> gsqgpatch.weight_mean(1.0)
        Traceback (most recent call last):
            ...
        ValueError: the weight is not integrable for alpha >= 1; found 1

    """
    if alpha >= 1:
        raise ValueError("the weight is not integrable for alpha >= 1; found %g" % alpha)
    return gsqgpatch.gamma_fn(1-alpha)/gsqgpatch.gamma_fn(1-alpha/2)**2


def _mean(func, config, singular_point, alpha):
    count = DEFAULT_NODES if config.far_nodes is None else config.far_nodes
    if singular_point is None:
        return float(numpy.mean(func(2*numpy.pi*numpy.arange(count)/count)))
    rule = gsqgpatch.self_weights(alpha, count, config)
    values = _smooth_factor(func, singular_point, alpha, rule.nodes)
    limit = _singular_limit(func, singular_point, alpha)
    if abs(limit) <= 1e-10*max(1., float(numpy.max(numpy.abs(values)))):
        return float(values.dot(rule.weights))
    if alpha >= 1:
        raise ValueError(
            "integrand is not integrable: smooth factor %.3e at the singular "
            "point with alpha=%g >= 1" % (limit, alpha))
    # The rules require a factor vanishing at y*; the constant part is exact.
    singular = numpy.abs(numpy.sin(rule.nodes/2)) == 0
    values = numpy.where(singular, 0., values-limit)
    return float(values.dot(rule.weights))+limit*weight_mean(alpha)


def mean_integral(func, config=None, singular_point=None, alpha=None, check=False):
    """
    Mean value ``(1/2 pi) int_0^{2 pi} f(y) dy`` of a periodic function.

    Without a singular point the periodic trapezoid rule is used. With one,
    `func` may behave like ``|2 sin((y-y*)/2)|^(-alpha)`` times a smooth
    function ``G``. The configured singular rule integrates ``G - G(y*)``
    against the weight, and ``G(y*)``, extrapolated from nearby samples,
    is multiplied by the exact mean of the weight. ``G(y*)`` must vanish
    for ``alpha >= 1``.

    Args:
        func (Callable[[numpy.ndarray], numpy.ndarray]):
            Vectorized integrand.
        config (Optional[gsqgpatch.QuadratureConfig]):
            Rule selection and node counts.
        singular_point (Optional[float]):
            Location ``y*`` of the singularity.
        alpha (Optional[float]):
            Strength of the singularity; required with `singular_point`.
        check (bool):
            Repeat with doubled node counts and compare.

    Returns:
        (float):
            The mean value.

    Raises:
        QuadratureConvergenceError:
            If `check` and doubling moved the result by more than
            ``config.convergence_tol``.
        ValueError:
            If ``alpha >= 1`` and ``G(y*)`` does not vanish.

    Examples:
        >>> gsqgpatch.mean_integral(lambda y: numpy.ones_like(y))
        1.0
        >>> abs(gsqgpatch.mean_integral(numpy.sin)) < 1e-15
        True
        >>> def func(y):
        ...     return (numpy.cos(y)-numpy.cos(2*y))/numpy.abs(2*numpy.sin(y/2))**1.5
        >>> moments = gsqgpatch.singular_moments(1.5, 2)
        >>> value = gsqgpatch.mean_integral(func, singular_point=0.0, alpha=1.5)
        >>> bool(numpy.isclose(value, moments[2]-moments[1], rtol=1e-12))
        True

    """
    config = QuadratureConfig() if config is None else config
    assert singular_point is None or alpha is not None
    value = _mean(func, config, singular_point, alpha)
    if check:
        count = DEFAULT_NODES if config.far_nodes is None else config.far_nodes
        finer = dataclasses.replace(config.doubled(), far_nodes=2*count)
        change = abs(_mean(func, finer, singular_point, alpha)-value)
        if change > config.convergence_tol:
            raise QuadratureConvergenceError(
                "doubling the nodes changed the mean by %.3e > %.1e" % (
                    change, config.convergence_tol))
    return value
