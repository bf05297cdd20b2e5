"""Projection of grid samples onto sine series."""
import warnings

import numpy

import gsqgpatch


class ParityWarning(RuntimeWarning):
    """Samples expected to be odd carry even content."""


def parity_leak(values):
    """
    Root-mean-square of the even part of grid samples.

    Args:
        values (numpy.ndarray):
            Samples at ``x_m = 2 pi m/M``.

    Returns:
        (float):
            Norm of ``(v(x) + v(-x))/2`` over the grid.

    """
    values = numpy.asarray(values, dtype=float)
    mirrored = numpy.roll(values[::-1], 1)
    return float(numpy.sqrt(numpy.mean(((values+mirrored)/2)**2)))


def project_to_sine(values, grid, order=None, parity_tol=1e-9, return_leak=False):
    """
    Project grid samples onto ``sin(j x)``, ``j = 1..N``.

    ``A_j = (2/M) sum_m values_m sin(j x_m)``. Cosine and mean content is
    discarded; if its norm exceeds `parity_tol` a `ParityWarning` is issued,
    as odd samples are expected.

    Args:
        values (numpy.ndarray):
            Samples on `grid`.
        grid (gsqgpatch.CollocationGrid):
            The grid the samples live on.
        order (Optional[int]):
            Number of retained modes. Defaults to ``grid.order``.
        parity_tol (float):
            Largest tolerated even content.
        return_leak (bool):
            Also return the discarded even content.

    Returns:
        (gsqgpatch.SineSeries, Tuple[gsqgpatch.SineSeries, float]):
            The projection, and if `return_leak` the even content norm.

    Examples:
        >>> grid = gsqgpatch.CollocationGrid(size=16, order=4)
        >>> x = grid.points
        >>> series = gsqgpatch.project_to_sine(
        ...     2*numpy.sin(x)+0.5*numpy.sin(4*x), grid)
        >>> series.coeffs.round(12)+0.0
        array([2. , 0. , 0. , 0.5])

    """
    values = numpy.asarray(values, dtype=float)
    assert values.shape == (grid.size,), (values.shape, grid.size)
    order = grid.order if order is None else order
    spectrum = numpy.fft.rfft(values)
    coeffs = -2*spectrum[1:order+1].imag/grid.size
    leak = parity_leak(values)
    if leak > parity_tol:
        warnings.warn("even content %.3e exceeds parity tolerance %.1e" % (
            leak, parity_tol), ParityWarning, stacklevel=2)
    series = gsqgpatch.SineSeries(coeffs)
    if return_leak:
        return series, leak
    return series
