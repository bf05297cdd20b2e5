"""Power-law fit of the scalar deviation from the point-vortex value."""
from typing import NamedTuple

import numpy

import gsqgpatch

STAR_VALUES = {
    # Point-vortex value of scalar1 for each fitted quantity.
    "omega": lambda geometry: gsqgpatch.omega_star(geometry),
    "u": lambda geometry: gsqgpatch.u_star(geometry),
}
MODE_OF = {"omega": "corotating", "u": "traveling"}
MIN_ENTRIES = 4


class InsufficientDataError(ValueError):
    """Too few usable entries for a scaling fit."""


class ScalingFit(NamedTuple):
    """
    Outcome of `scaling_fit`.

    Attributes:
        exponent (float):
            Fitted slope of ``log|scalar1 - star|`` against ``log eps``.
        residual (float):
            Root-mean-square residual of the linear fit.
        count (int):
            Number of entries used.
        within_band (bool):
            Whether ``|exponent - alpha| <= band``.
        bound_holds (bool):
            Whether ``exponent >= alpha - band``, i.e. the deviation is
            at most of order ``eps^alpha``.

    """

    exponent: float
    residual: float
    count: int
    within_band: bool
    bound_holds: bool


def scaling_fit(branch, which=None, band=0.3):
    """
    Fit ``|scalar1(eps) - star| ~ C eps^k`` over the positive entries.

    Args:
        branch (gsqgpatch.SolutionBranch):
            Converged branch.
        which (Optional[str]):
            "omega" (co-rotating) or "u" (traveling); inferred from the
            branch mode if omitted.
        band (float):
            Half-width of the accepted band around ``alpha``.

    Returns:
        (ScalingFit):
            Slope, fit residual and band checks.

    Raises:
        InsufficientDataError:
            If fewer than four entries with ``eps > 0`` deviate from the
            star value by more than ``100 tol_residual``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> star = gsqgpatch.omega_star(geometry)
        >>> zero = gsqgpatch.CosineSeries.zeros(2)
        >>> record = gsqgpatch.Diagnostics(0.0, 1.0, 1.0, 0.0, 0)
        >>> entries = [gsqgpatch.BranchEntry(eps, gsqgpatch.SolveState(
        ...     "corotating", star+eps**2, 5.0, zero, zero), record)
        ...     for eps in (0.01, 0.02, 0.04, 0.08)]
        >>> branch = gsqgpatch.SolutionBranch(
        ...     geometry, "corotating", entries, 8, 1e-10)
        >>> fit = gsqgpatch.scaling_fit(branch)
        >>> round(fit.exponent, 6), fit.within_band, fit.bound_holds
        (2.0, False, True)

    """
    which = gsqgpatch.SCALING_QUANTITY[branch.mode] if which is None else which
    assert MODE_OF[which] == branch.mode, (which, branch.mode)
    star = STAR_VALUES[which](branch.geometry)
    points = [(entry.eps, abs(entry.state.scalar1-star))
              for entry in branch.entries if entry.eps > 0]
    points = [(eps, deviation) for eps, deviation in points
              if deviation > 100*branch.tol_residual]
    if len(points) < MIN_ENTRIES:
        raise InsufficientDataError(
            "scaling fit needs >= %d entries with eps > 0 and a resolved "
            "deviation; found %d" % (MIN_ENTRIES, len(points)))
    log_eps, log_deviation = numpy.log(numpy.array(points)).T
    (slope, intercept) = numpy.polyfit(log_eps, log_deviation, 1)
    residual = log_deviation-(slope*log_eps+intercept)
    alpha = branch.geometry.alpha
    return ScalingFit(
        exponent=float(slope),
        residual=float(numpy.sqrt(numpy.mean(residual**2))),
        count=len(points),
        within_band=bool(abs(slope-alpha) <= band),
        bound_holds=bool(slope >= alpha-band),
    )
