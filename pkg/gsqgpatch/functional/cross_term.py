"""Interaction of a patch with the other patch of the pair."""
import numpy

import gsqgpatch


def cross_interaction(target_perturbation, source_perturbation, geometry,
                      patch_index, grid, quad=None, circulation=None):
    """
    Velocity induced on patch ``i`` by patch ``k = 3 - i``.

    Both boundaries are sampled on `grid`; the source mean is the periodic
    trapezoid rule, the integrand being smooth since the patches are
    separated. With ``xi = b_k R_k(y) e^{iy} + b_i R_i(x) e^{ix}`` the
    distance satisfies ``|eps xi - d|^2 = d^2 (1 + eps T)`` and the kernel
    is ``d^(-alpha) (1 + eps T)^(-alpha/2)``. The ``1/eps`` singular part is
    carried by ``((1 + eps T)^(-alpha/2) - 1)/eps``, evaluated through
    `power_increment`.

    Args:
        target_perturbation (gsqgpatch.CosineSeries):
            Perturbation ``p_i`` of the patch the velocity acts on.
        source_perturbation (gsqgpatch.CosineSeries):
            Perturbation ``p_k`` of the inducing patch.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Target patch ``i``.
        grid (gsqgpatch.CollocationGrid):
            Collocation points, used for both ``x`` and ``y``.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Provides the Taylor switch.
        circulation (Optional[float]):
            Vorticity magnitude ``gamma_k`` of the source.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Raises:
        DegenerateBoundaryError:
            If a radial profile is not positive or the boundaries meet.

    """
    quad = gsqgpatch.QuadratureConfig() if quad is None else quad
    target, source = patch_index, 3-patch_index
    if circulation is None:
        circulation = geometry.circulation(source)
    eps, alpha, distance = geometry.eps, geometry.alpha, geometry.d
    eta = geometry.eta(target)
    target_ratio = geometry.eta_ratio(target)
    source_ratio = geometry.eta_ratio(source)

    x = grid.points
    target_values = gsqgpatch.series_eval(target_perturbation, grid)
    target_radius = gsqgpatch.check_radius(1+eta*target_values, target)
    slope = gsqgpatch.series_eval_deriv(target_perturbation, grid)/target_radius
    source_values = gsqgpatch.series_eval(source_perturbation, grid)
    source_slope = gsqgpatch.series_eval_deriv(source_perturbation, grid)
    source_radius = gsqgpatch.check_radius(
        1+geometry.eta(source)*source_values, source)

    offset = numpy.add.outer(
        geometry.scale(target)*target_radius*numpy.exp(1j*x),
        geometry.scale(source)*source_radius*numpy.exp(1j*x))
    excess = (-2*distance*offset.real+eps*numpy.abs(offset)**2)/distance**2
    if numpy.any(1+eps*excess <= 0):
        raise gsqgpatch.DegenerateBoundaryError(
            "boundaries of the two patches intersect")
    increment = gsqgpatch.power_increment(
        excess, eps, alpha/2, taylor=abs(eps) < quad.taylor_threshold,
        nodes=quad.taylor_nodes)
    scale = distance**-alpha
    kernel = scale*(1+eps*increment)

    difference = numpy.subtract.outer(x, x)
    sin, cos = numpy.sin(difference), numpy.cos(difference)
    total = (source_ratio*scale*numpy.mean(source_values*sin, axis=1)+
             scale*numpy.mean(source_radius*sin*increment, axis=1))
    total += eta*slope*source_ratio*numpy.mean(source_slope*sin*kernel, axis=1)
    total += source_ratio*numpy.mean(source_slope*cos*kernel, axis=1)
    total -= target_ratio*slope*numpy.mean(source_radius*cos*kernel, axis=1)
    return (circulation*gsqgpatch.c_alpha(alpha)/geometry.scale(source))*total


def eval_F_i3(state, geometry, patch_index, grid, quad=None):
    """
    Cross-interaction term ``F_i3`` of a state.

    Args:
        state (gsqgpatch.SolveState):
            State providing ``p1``, ``p2`` and, in traveling mode, ``gamma2``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Target patch.
        grid (gsqgpatch.CollocationGrid):
            Collocation points.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0, d=6.0)
        >>> grid = gsqgpatch.CollocationGrid(size=16, order=4)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 4)
        >>> values = gsqgpatch.eval_F_i3(state, geometry, 2, grid)
        >>> coeffs = gsqgpatch.project_to_sine(values, grid).coeffs
        >>> bool(numpy.allclose(coeffs, [2/(2*36), 0, 0, 0]))
        True

    """
    circulation = gsqgpatch.circulations(state, geometry)[2-patch_index]
    return cross_interaction(
        state.perturbation(patch_index), state.perturbation(3-patch_index),
        geometry, patch_index, grid, quad, circulation)


def cross_strain_coefficient(geometry, patch_index, circulation=None):
    """
    Leading ``sin(2x)`` coefficient of the cross term for round patches.

    For ``p1 = p2 = 0`` the strain of the other patch deforms patch ``i``
    at first order in ``eps``:
    ``eps alpha (alpha+2) C_alpha gamma_k b_i/(4 d^(2+alpha))``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1, d=5.0)
        >>> bool(numpy.isclose(gsqgpatch.cross_strain_coefficient(geometry, 1),
        ...                    0.1*3/(4*125)))
        True

    """
    alpha = geometry.alpha
    if circulation is None:
        circulation = geometry.circulation(3-patch_index)
    return float(geometry.eps*alpha*(alpha+2)*gsqgpatch.c_alpha(alpha)*
                 circulation*geometry.scale(patch_index)/
                 (4*geometry.d**(2+alpha)))
