"""Continuation in eps from the point-vortex state."""
import logging

import gsqgpatch

logger = logging.getLogger(__name__)

SCALING_QUANTITY = {
    # Scalar whose deviation from the point-vortex value is fitted.
    "corotating": "omega",
    "traveling": "u",
}


class ContinuationStall(Exception):
    """Internal signal: a step failed after every allowed bisection."""

    def __init__(self, status, cause):
        super(ContinuationStall, self).__init__(str(cause))
        self.status = status
        self.cause = cause


def _advance(geometry, start_eps, start, target_eps, config, depth):
    """Solve at `target_eps` from a converged state, bisecting on failure."""
    try:
        state, diagnostics = gsqgpatch.newton_solve(
            geometry.with_eps(target_eps), start, config)
        return [gsqgpatch.BranchEntry(target_eps, state, diagnostics)]
    except (gsqgpatch.NewtonError, gsqgpatch.DegenerateBoundaryError) as err:
        status = ("degenerate" if isinstance(err, gsqgpatch.DegenerateBoundaryError)
                  else "stalled")
        if depth == 0 or target_eps == start_eps:
            raise ContinuationStall(status, err)
        middle = (start_eps+target_eps)/2
        logger.warning("step %g -> %g failed (%s); bisecting at %g",
                       start_eps, target_eps, err, middle,
                       extra={"eps": target_eps})
    entries = _advance(geometry, start_eps, start, middle, config, depth-1)
    return entries+_advance(
        geometry, middle, entries[-1].state, target_eps, config, depth-1)


def continue_branch(geometry, mode, config=None):
    """
    Follow the solution branch through ``config.eps_schedule``.

    The ``eps = 0`` entry starts from the point-vortex state. Every other
    value warm-starts Newton from the last converged entry of the same
    sign. A failed step is bisected up to ``config.max_bisections`` times;
    intermediate values reached that way are kept as entries. If a step
    still fails, the rest of that side of the schedule is skipped and the
    branch is flagged "stalled", or "degenerate" if a boundary stopped
    being star-shaped.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Pair parameters; ``eps`` is ignored.
        mode (str):
            Either "corotating" or "traveling".
        config (Optional[gsqgpatch.SolverConfig]):
            Solver settings and schedule.

    Returns:
        (gsqgpatch.SolutionBranch):
            Converged entries sorted by ``eps``.

    Raises:
        GeometryError:
            If the geometry does not admit `mode`.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0)
        >>> config = gsqgpatch.SolverConfig(order=4, grid_size=16)
        >>> branch = gsqgpatch.continue_branch(geometry, "corotating", config)
        >>> branch.status, branch.eps_values
        ('complete', array([0.]))

    """
    config = gsqgpatch.SolverConfig() if config is None else config
    gsqgpatch.check_geometry(geometry, mode)
    geometry = geometry.with_eps(0.)
    schedule = config.eps_schedule
    statuses = []
    entries = []
    try:
        entries += _advance(geometry, 0., gsqgpatch.trivial_state(
            geometry, mode, config.order), 0., config, 0)
    except ContinuationStall as stall:
        logger.error("no solution at eps=0: %s", stall.cause, extra={"eps": 0.})
        statuses.append(stall.status)
    if entries:
        origin = entries[0]
        for sign in (1, -1):
            current = origin
            for eps in [value for value in schedule if value*sign > 0]:
                try:
                    reached = _advance(geometry, current.eps, current.state, eps,
                                       config, config.max_bisections)
                except ContinuationStall as stall:
                    logger.warning("continuation stalled before eps=%g: %s",
                                   eps, stall.cause, extra={"eps": eps})
                    statuses.append(stall.status)
                    break
                entries += reached
                current = reached[-1]
                logger.info("reached eps=%g", eps, extra={"eps": eps})
    status = statuses[0] if statuses else "complete"
    branch = gsqgpatch.SolutionBranch(
        geometry=geometry, mode=mode, entries=tuple(entries),
        grid_size=config.grid_size, tol_residual=config.tol_residual,
        status=status)
    try:
        fit = gsqgpatch.scaling_fit(branch, SCALING_QUANTITY[mode])
    except gsqgpatch.InsufficientDataError:
        return branch
    logger.info("scaling exponent %.3f over %d entries", fit.exponent, fit.count)
    return branch.replace(scaling_exponent=fit.exponent)
