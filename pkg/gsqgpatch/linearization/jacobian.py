"""Finite-difference Jacobian of the assembled residual."""
import logging

import numpy

import gsqgpatch

logger = logging.getLogger(__name__)


class JacobianProbeError(RuntimeError):
    """A residual evaluation produced non-finite values while probing."""


def fd_jacobian(state, geometry, grid, quad=None, step=1e-6):
    """
    Central-difference Jacobian in solver coordinates.

    Column ``k`` is ``(F(u + h_k e_k) - F(u - h_k e_k))/(2 h_k)`` with
    ``h_k = step max(1, |u_k|)``, ``u`` the packed state and ``F`` the
    residual of ``state.mode``.

    Args:
        state (gsqgpatch.SolveState):
            Linearization point.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters, including ``eps``.
        grid (gsqgpatch.CollocationGrid):
            Collocation grid.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.
        step (float):
            Relative probe size.

    Returns:
        (numpy.ndarray):
            Square matrix of size ``2 N``.

    Raises:
        JacobianProbeError:
            If a probe residual is not finite.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0)
        >>> grid = gsqgpatch.CollocationGrid(size=16, order=4)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 4)
        >>> jacobian = gsqgpatch.fd_jacobian(state, geometry, grid)
        >>> expected = gsqgpatch.trivial_matrix(geometry, "corotating", 4)
        >>> bool(numpy.allclose(jacobian, expected, atol=1e-8))
        True

    """
    center = state.to_vector()
    order = state.order
    jacobian = numpy.empty((len(center), len(center)))
    for column in range(len(center)):
        delta = step*max(1., abs(center[column]))
        columns = []
        for sign in (1, -1):
            probe = center.copy()
            probe[column] += sign*delta
            probe = gsqgpatch.SolveState.from_vector(state.mode, probe, order)
            values = gsqgpatch.assemble(probe, geometry, grid, quad,
                                        parity_tol=numpy.inf).to_vector()
            if not numpy.all(numpy.isfinite(values)):
                raise JacobianProbeError(
                    "non-finite residual probing unknown %d at eps=%g" % (
                        column, geometry.eps))
            columns.append(values)
        jacobian[:, column] = (columns[0]-columns[1])/(2*delta)
    logger.debug("jacobian of size %d at eps=%g", len(center), geometry.eps)
    return jacobian
