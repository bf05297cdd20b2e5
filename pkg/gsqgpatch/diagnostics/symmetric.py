"""Comparison of the two patches for symmetric pairs."""
from typing import NamedTuple, Optional, Tuple

import numpy


class SymmetryReport(NamedTuple):
    """
    Outcome of `symmetric_reduction_check`.

    Attributes:
        max_difference (float):
            Largest ``max_j |a_j - b_j|`` over the entries.
        max_center_offset (Optional[float]):
            Largest ``|xbar - d/2|``; co-rotating branches only.
        differences (Tuple[Tuple[float, float], ...]):
            ``(eps, max_j |a_j - b_j|)`` per entry.

    """

    max_difference: float
    max_center_offset: Optional[float]
    differences: Tuple[Tuple[float, float], ...]


def symmetric_reduction_check(geometry, branch):
    """
    Measure how far a branch is from the symmetric reduction ``p1 = p2``.

    For ``gamma1 = gamma2`` and ``b1 = b2`` the pair is symmetric under the
    reflection through the midpoint of the centers, which exchanges the
    patches; solutions then have equal perturbations and, when
    co-rotating, ``xbar = d/2``. For other parameters the report measures
    the asymmetry.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        branch (gsqgpatch.SolutionBranch):
            Branch to measure.

    Returns:
        (SymmetryReport):
            Differences per entry and their maxima.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> config = gsqgpatch.SolverConfig(order=4, grid_size=16)
        >>> branch = gsqgpatch.continue_branch(geometry, "corotating", config)
        >>> gsqgpatch.symmetric_reduction_check(geometry, branch)
        SymmetryReport(max_difference=0.0, max_center_offset=0.0, differences=((0.0, 0.0),))

    """
    differences, offsets = [], []
    for entry in branch.entries:
        state = entry.state
        difference = float(numpy.max(numpy.abs(state.p1.coeffs-state.p2.coeffs),
                                     initial=0.))
        differences.append((entry.eps, difference))
        if branch.mode == "corotating":
            offsets.append(abs(state.scalar2-geometry.d/2))
    return SymmetryReport(
        max_difference=max([value for _, value in differences], default=0.0),
        max_center_offset=max(offsets) if offsets else None,
        differences=tuple(differences),
    )
