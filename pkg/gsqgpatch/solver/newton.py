"""Damped Newton iteration for a single value of eps."""
import logging

import numpy
import scipy.linalg

import gsqgpatch

logger = logging.getLogger(__name__)


class NewtonError(RuntimeError):
    """Newton iteration failed to converge."""

    def __init__(self, message, history=()):
        super(NewtonError, self).__init__(message)
        self.history = tuple(history)


class MaxIterationsError(NewtonError):
    """Residual above tolerance after the iteration budget."""


class SingularJacobianError(NewtonError):
    """The Jacobian is numerically singular."""


def _evaluate(state, geometry, grid, config):
    residual = gsqgpatch.assemble(state, geometry, grid, config.quadrature,
                                  config.parity_tol)
    return residual, residual.norm()


def _damped_step(state, step, norm, geometry, grid, config):
    """Halve the step until the residual decreases or the floor is hit."""
    vector = state.to_vector()
    damping = config.damping
    while True:
        trial = gsqgpatch.SolveState.from_vector(
            state.mode, vector+damping*step, state.order)
        try:
            residual, trial_norm = _evaluate(trial, geometry, grid, config)
        except gsqgpatch.DegenerateBoundaryError:
            if damping <= config.damping_floor:
                raise
            damping /= 2
            continue
        if trial_norm < norm or damping <= config.damping_floor:
            return trial, residual, trial_norm, damping
        damping /= 2


def newton_solve(geometry, initial, config=None):
    """
    Solve the residual equations of ``initial.mode`` at ``geometry.eps``.

    Each step solves the finite-difference Jacobian system by dense LU and
    is damped by halving until the residual norm decreases, down to
    ``config.damping_floor``.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Pair parameters with the target ``eps``.
        initial (gsqgpatch.SolveState):
            Starting guess; resized to ``config.order``.
        config (Optional[gsqgpatch.SolverConfig]):
            Solver settings.

    Returns:
        (Tuple[gsqgpatch.SolveState, gsqgpatch.Diagnostics]):
            Converged state and its diagnostics.

    Raises:
        MaxIterationsError:
            If the tolerance is not met within ``config.max_newton_iters``.
        SingularJacobianError:
            If the Jacobian condition exceeds ``config.condition_limit``.
        DegenerateBoundaryError:
            If even the smallest damped step leaves a boundary degenerate.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0)
        >>> config = gsqgpatch.SolverConfig(order=4, grid_size=16)
        >>> start = gsqgpatch.trivial_state(geometry, "corotating", 4)
        >>> state, diagnostics = gsqgpatch.newton_solve(geometry, start, config)
        >>> diagnostics.newton_iters, state == start
        (0, True)

    """
    config = gsqgpatch.SolverConfig() if config is None else config
    grid = config.grid
    state = initial.resize(config.order)
    gsqgpatch.check_geometry(geometry, state.mode)
    residual, norm = _evaluate(state, geometry, grid, config)
    history = [norm]
    condition = None
    iteration = 0
    while norm > config.tol_residual:
        if iteration >= config.max_newton_iters:
            logger.error("newton failed at eps=%g: residual %.3e after %d iterations",
                         geometry.eps, norm, iteration,
                         extra={"eps": geometry.eps, "iteration": iteration})
            raise MaxIterationsError(
                "residual %.3e > %.1e after %d iterations at eps=%g" % (
                    norm, config.tol_residual, iteration, geometry.eps), history)
        jacobian = gsqgpatch.fd_jacobian(state, geometry, grid,
                                         config.quadrature, config.fd_step)
        condition = float(numpy.linalg.cond(jacobian))
        if not numpy.isfinite(condition) or condition > config.condition_limit:
            raise SingularJacobianError(
                "jacobian condition %.3e exceeds %.1e at eps=%g" % (
                    condition, config.condition_limit, geometry.eps), history)
        step = scipy.linalg.lu_solve(scipy.linalg.lu_factor(jacobian),
                                     -residual.to_vector())
        state, residual, norm, damping = _damped_step(
            state, step, norm, geometry, grid, config)
        iteration += 1
        history.append(norm)
        logger.debug("eps=%g iteration %d: residual %.3e, damping %g",
                     geometry.eps, iteration, norm, damping,
                     extra={"eps": geometry.eps, "iteration": iteration})

    convexity = gsqgpatch.convexity_check(state, geometry, grid)
    diagnostics = gsqgpatch.Diagnostics(
        residual_norm=norm,
        min_curvature_1=convexity.min_curvature_1,
        min_curvature_2=convexity.min_curvature_2,
        parity_leak=residual.parity_leak,
        newton_iters=iteration,
        condition=condition,
        history=tuple(history),
    )
    logger.info("converged at eps=%g in %d iterations, residual %.3e",
                geometry.eps, iteration, norm,
                extra={"eps": geometry.eps, "iteration": iteration})
    return state, diagnostics
