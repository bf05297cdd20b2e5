"""Point-reflection symmetry between eps and -eps."""
from typing import NamedTuple, Tuple

import numpy

import gsqgpatch


class ReflectionReport(NamedTuple):
    """
    Outcome of `reflection_check`.

    Attributes:
        max_discrepancy (float):
            Largest coefficient difference over all matched pairs.
        discrepancies (Tuple[Tuple[float, float], ...]):
            ``(eps, difference)`` for every matched ``eps > 0``.
        unmatched (Tuple[float, ...]):
            Nonzero ``eps`` values without a mirrored entry.

    """

    max_discrepancy: float
    discrepancies: Tuple[Tuple[float, float], ...]
    unmatched: Tuple[float, ...]


def reflect_state(state):
    """
    Describe the same configuration with ``eps`` replaced by ``-eps``.

    Flipping the sign of ``eps`` rotates each parameterization by ``pi``,
    so ``p(x)`` becomes ``-p(x + pi)``: ``a_j -> (-1)^(j+1) a_j``. The
    scalars are unchanged.

    Examples:
        >>> zero = gsqgpatch.CosineSeries.zeros(3)
        >>> state = gsqgpatch.SolveState(
        ...     "corotating", 1.0, 2.0, gsqgpatch.CosineSeries([0, 1, 1]), zero)
        >>> gsqgpatch.reflect_state(state).p1
        CosineSeries([0.0, -1.0, 1.0])

    """
    def reflect(series):
        signs = numpy.where(series.modes % 2, 1., -1.)
        return gsqgpatch.CosineSeries(signs*series.coeffs+0.)

    return state.replace(p1=reflect(state.p1), p2=reflect(state.p2))


def reflection_check(branch, atol=1e-12):
    """
    Compare entries at ``eps`` and ``-eps`` after reflection.

    Args:
        branch (gsqgpatch.SolutionBranch):
            Branch to check.
        atol (float):
            Tolerance for matching ``-eps`` against stored values.

    Returns:
        (ReflectionReport):
            Discrepancies of the matched pairs and unmatched values.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> zero = gsqgpatch.CosineSeries.zeros(3)
        >>> state = gsqgpatch.SolveState(
        ...     "corotating", 1.0, 2.0, gsqgpatch.CosineSeries([0, 1e-3, 0]), zero)
        >>> record = gsqgpatch.Diagnostics(0.0, 1.0, 1.0, 0.0, 0)
        >>> branch = gsqgpatch.SolutionBranch(geometry, "corotating", [
        ...     gsqgpatch.BranchEntry(0.01, state, record),
        ...     gsqgpatch.BranchEntry(-0.01, gsqgpatch.reflect_state(state), record),
        ...     gsqgpatch.BranchEntry(0.02, state, record)], 12, 1e-10)
        >>> gsqgpatch.reflection_check(branch)
        ReflectionReport(max_discrepancy=0.0, discrepancies=((0.01, 0.0),), unmatched=(0.02,))

    """
    negatives = [entry for entry in branch.entries if entry.eps < 0]
    discrepancies, unmatched = [], []
    for entry in branch.entries:
        if entry.eps <= 0:
            continue
        mirrors = [other for other in negatives
                   if abs(other.eps+entry.eps) <= atol]
        if not mirrors:
            unmatched.append(entry.eps)
            continue
        mirrored = reflect_state(mirrors[0].state).to_vector()
        difference = float(numpy.max(numpy.abs(mirrored-entry.state.to_vector())))
        discrepancies.append((entry.eps, difference))
    positives = [entry.eps for entry in branch.entries if entry.eps > 0]
    unmatched += [entry.eps for entry in negatives
                  if not any(abs(entry.eps+eps) <= atol for eps in positives)]
    return ReflectionReport(
        max_discrepancy=max([difference for _, difference in discrepancies],
                            default=0.0),
        discrepancies=tuple(discrepancies),
        unmatched=tuple(sorted(unmatched)),
    )
