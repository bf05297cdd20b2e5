"""Assembly of the co-rotating and traveling residuals."""
import numpy

import gsqgpatch

ASSEMBLERS = {}


def assembles(mode):
    """Register the residual assembler of a mode."""
    def decorator(func):
        """Register function."""
        ASSEMBLERS[mode] = func
        return func
    return decorator


def _project(samples, state, grid, parity_tol):
    series, leaks = [], []
    for values in samples:
        projected, leak = gsqgpatch.project_to_sine(
            values, grid, order=state.order, parity_tol=parity_tol,
            return_leak=True)
        series.append(projected)
        leaks.append(leak)
    return gsqgpatch.ResidualPair(series[0], series[1], max(leaks))


@assembles("corotating")
def assemble_F(state, geometry, grid, quad=None, parity_tol=1e-9):
    """
    Co-rotating residual ``F_i = F_i1 + F_i2 + F_i3``, ``i = 1, 2``.

    Args:
        state (gsqgpatch.SolveState):
            Co-rotating state ``(Omega, xbar, p1, p2)``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters, including ``eps``.
        grid (gsqgpatch.CollocationGrid):
            Collocation grid; its size sets the quadrature resolution.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.
        parity_tol (float):
            Tolerated even content before a `ParityWarning`.

    Returns:
        (gsqgpatch.ResidualPair):
            Sine coefficients of both components up to ``state.order``.

    Raises:
        ZeroCirculationError:
            If ``gamma1 + gamma2 = 0``.
        DegenerateBoundaryError:
            If a boundary stops being star-shaped.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.5, gamma1=2.0)
        >>> grid = gsqgpatch.CollocationGrid(size=32, order=8)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 8)
        >>> gsqgpatch.assemble_F(state, geometry, grid).norm() < 1e-14
        True

    """
    assert state.mode == "corotating", state.mode
    gsqgpatch.check_geometry(geometry, state.mode)
    samples = [
        gsqgpatch.eval_F_i1(state, geometry, index, grid)+
        gsqgpatch.eval_F_i2(state, geometry, index, grid, quad)+
        gsqgpatch.eval_F_i3(state, geometry, index, grid, quad)
        for index in (1, 2)
    ]
    return _project(samples, state, grid, parity_tol)


@assembles("traveling")
def assemble_G(state, geometry, grid, quad=None, parity_tol=1e-9):
    """
    Traveling residual ``G_i = G_i1 - F_i2 + F_i3``, ``i = 1, 2``.

    Patch 2 carries vorticity of the opposite sign, with magnitude
    ``gamma2 = state.scalar2``. Together with the reflected
    parameterization of its boundary, this flips the sign of the self
    terms only.

    Args:
        state (gsqgpatch.SolveState):
            Traveling state ``(U, gamma2, p1, p2)``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters; ``gamma2`` is ignored.
        grid (gsqgpatch.CollocationGrid):
            Collocation grid.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.
        parity_tol (float):
            Tolerated even content before a `ParityWarning`.

    Returns:
        (gsqgpatch.ResidualPair):
            Sine coefficients of both components.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, d=5.0)
        >>> grid = gsqgpatch.CollocationGrid(size=32, order=8)
        >>> zero = gsqgpatch.CosineSeries.zeros(8)
        >>> state = gsqgpatch.SolveState("traveling", 0.0, 2.0, zero, zero)
        >>> residual = gsqgpatch.assemble_G(state, geometry, grid)
        >>> residual.r1.coeffs[:2].round(12)+0.0
        array([0.04, 0.  ])
        >>> residual.r2.coeffs[:2].round(12)+0.0
        array([0.02, 0.  ])

    """
    assert state.mode == "traveling", state.mode
    samples = [
        gsqgpatch.eval_G_i1(state, geometry, index, grid)-
        gsqgpatch.eval_F_i2(state, geometry, index, grid, quad)+
        gsqgpatch.eval_F_i3(state, geometry, index, grid, quad)
        for index in (1, 2)
    ]
    return _project(samples, state, grid, parity_tol)


def assemble(state, geometry, grid, quad=None, parity_tol=1e-9):
    """
    Residual of the system matching ``state.mode``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> grid = gsqgpatch.CollocationGrid(size=16, order=4)
        >>> state = gsqgpatch.trivial_state(geometry, "traveling", 4)
        >>> float(numpy.max(numpy.abs(
        ...     gsqgpatch.assemble(state, geometry, grid).to_vector()))) < 1e-15
        True

    """
    return ASSEMBLERS[state.mode](state, geometry, grid, quad, parity_tol)
