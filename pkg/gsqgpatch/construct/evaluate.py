"""Evaluation of truncated Fourier series on a collocation grid."""
import numpy


def series_eval(series, grid):
    """
    Evaluate a cosine or sine series at the collocation points.

    Uses an inverse real FFT; for an order ``N < M/2`` this equals direct
    summation up to round-off.

    Args:
        series (gsqgpatch.CosineSeries, gsqgpatch.SineSeries):
            Series to evaluate.
        grid (gsqgpatch.CollocationGrid):
            Points to evaluate at.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Examples:
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> values = gsqgpatch.series_eval(gsqgpatch.CosineSeries([1.0]), grid)
        >>> numpy.allclose(values, numpy.cos(grid.points))
        True

    """
    assert series.order < grid.size//2, (series.order, grid.size)
    spectrum = numpy.zeros(grid.size//2+1, dtype=complex)
    if series.parity == "even":
        spectrum[1:series.order+1] = series.coeffs
    else:
        spectrum[1:series.order+1] = -1j*series.coeffs
    return numpy.fft.irfft(spectrum, n=grid.size)*(grid.size/2)


def series_eval_deriv(series, grid):
    """
    Evaluate the derivative of a series at the collocation points.

    Args:
        series (gsqgpatch.CosineSeries, gsqgpatch.SineSeries):
            Series to differentiate and evaluate.
        grid (gsqgpatch.CollocationGrid):
            Points to evaluate at.

    Returns:
        (numpy.ndarray):
            Values of ``-sum j a_j sin(j x)`` (cosine input) or
            ``sum j A_j cos(j x)`` (sine input).

    """
    return series_eval(series.derivative(), grid)
