"""Resolution doubling check of assembled residuals."""
import logging

import numpy

import gsqgpatch
from .common import QuadratureConfig, QuadratureConvergenceError

logger = logging.getLogger(__name__)


def quadrature_selftest(state, geometry, grid, config=None):
    """
    Compare residuals on `grid` and on a grid of twice the resolution.

    Node counts of the quadrature are doubled along with the grid. The
    retained sine coefficients of both residual components must agree to
    ``config.convergence_tol``.

    Args:
        state (gsqgpatch.SolveState):
            State to assemble the residual at.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters, including ``eps``.
        grid (gsqgpatch.CollocationGrid):
            Base grid.
        config (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.

    Returns:
        (float):
            Largest coefficient change.

    Raises:
        QuadratureConvergenceError:
            If the change exceeds the tolerance.

    """
    config = QuadratureConfig() if config is None else config
    coarse = gsqgpatch.assemble(state, geometry, grid, config).to_vector()
    fine_grid = grid.refine()
    fine = gsqgpatch.assemble(
        state.resize(fine_grid.order), geometry, fine_grid, config.doubled())
    order = grid.order
    fine = numpy.concatenate([fine.r1.coeffs[:order], fine.r2.coeffs[:order]])
    change = float(numpy.max(numpy.abs(fine-coarse)))
    logger.debug("quadrature self-test: change %.3e at M=%d", change, grid.size)
    if change > config.convergence_tol:
        raise QuadratureConvergenceError(
            "doubling M=%d changed a residual coefficient by %.3e > %.1e" % (
                grid.size, change, config.convergence_tol))
    return change
