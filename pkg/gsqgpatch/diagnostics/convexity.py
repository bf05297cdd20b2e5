"""Convexity of both patches."""
from typing import NamedTuple

import numpy

import gsqgpatch


class ConvexityReport(NamedTuple):
    """Outcome of `convexity_check`."""

    passed: bool
    min_curvature_1: float
    min_curvature_2: float


def convexity_check(state, geometry, grid):
    """
    Check that both boundaries have positive curvature everywhere.

    Args:
        state (gsqgpatch.SolveState):
            State providing the perturbations.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        grid (gsqgpatch.CollocationGrid):
            Points to check at.

    Returns:
        (ConvexityReport):
            Pass flag and the smallest curvature of each patch. A boundary
            that is not star-shaped counts as failing with curvature
            ``-inf``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
        >>> grid = gsqgpatch.CollocationGrid(size=16, order=4)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 4)
        >>> gsqgpatch.convexity_check(state, geometry, grid)
        ConvexityReport(passed=True, min_curvature_1=1.0, min_curvature_2=1.0)

    """
    minima = []
    for index in (1, 2):
        try:
            curvature = gsqgpatch.signed_curvature(
                state.perturbation(index), geometry, index, grid)
        except gsqgpatch.DegenerateBoundaryError:
            minima.append(-numpy.inf)
        else:
            minima.append(float(numpy.min(curvature)))
    return ConvexityReport(min(minima) > 0, minima[0], minima[1])
