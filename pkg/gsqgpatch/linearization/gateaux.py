"""Analytic directional derivative of the self-interaction."""
import numpy

import gsqgpatch


def gateaux_self(state, geometry, patch_index, grid, direction, quad=None):
    """
    Derivative of `eval_F_i2` with respect to ``p_i`` along `direction`.

    With ``R = 1 + eta p`` and ``R' = eta p'`` the self term reads
    ``-(C_alpha gamma/eta) I/R(x)`` with ``I`` the singular mean of
    ``N Q^(-alpha/2)``, where

    ``N = (R(x) R(y) + R'(x) R'(y)) sin(s) + (R(x) R'(y) - R'(x) R(y)) cos(s)``,
    ``Q = R(x) R(y) + (R(x) - R(y))^2/(4 sin^2(s/2))``.

    Differentiating ``R`` along ``eta h`` cancels the ``1/eta`` and gives
    ``-C_alpha gamma (-h(x) I/R(x)^2 + J/R(x))``, ``J`` the singular mean
    of ``N_h Q^(-alpha/2) - (alpha/2) N Q^(-alpha/2-1) Q_h``.

    Args:
        state (gsqgpatch.SolveState):
            Linearization point.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        grid (gsqgpatch.CollocationGrid):
            Collocation grid.
        direction (gsqgpatch.CosineSeries):
            Variation ``h`` of ``p_i``.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.

    Returns:
        (numpy.ndarray):
            The directional derivative at the grid points.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> grid = gsqgpatch.CollocationGrid(size=32, order=8)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 8)
        >>> values = gsqgpatch.gateaux_self(
        ...     state, geometry, 1, grid, gsqgpatch.CosineSeries.mode(2, 8))
        >>> coeffs = gsqgpatch.project_to_sine(values, grid).coeffs
        >>> bool(numpy.isclose(coeffs[1], -2*gsqgpatch.sigma_j(1.0, 2)))
        True

    """
    quad = gsqgpatch.QuadratureConfig() if quad is None else quad
    alpha = geometry.alpha
    eta = geometry.eta(patch_index)
    circulation = gsqgpatch.circulations(state, geometry)[patch_index-1]
    perturbation = state.perturbation(patch_index)
    rule = gsqgpatch.self_weights(alpha, grid.size, quad)

    def sampled(series):
        values = gsqgpatch.series_eval(series, grid)
        source = gsqgpatch.source_samples(series, values, grid, rule)
        return values[:, numpy.newaxis], source

    px, py = sampled(perturbation)
    dpx, dpy = sampled(perturbation.derivative())
    hx, hy = sampled(direction)
    dhx, dhy = sampled(direction.derivative())
    rx, ry = 1+eta*px, 1+eta*py
    gsqgpatch.check_radius(rx, patch_index)
    gsqgpatch.check_radius(ry, patch_index)
    drx, dry = eta*dpx, eta*dpy

    nodes = rule.nodes
    sin, cos = numpy.sin(nodes), numpy.cos(nodes)
    half_chord = 2*numpy.sin(nodes/2)
    singular = half_chord == 0
    half_chord[singular] = 1.

    quotient = (px-py)/half_chord
    quotient_h = (hx-hy)/half_chord
    gap = rx*ry+(eta*quotient)**2
    gap_h = hx*ry+rx*hy+2*eta*quotient*quotient_h
    numerator = (rx*ry+drx*dry)*sin+(rx*dry-drx*ry)*cos
    numerator_h = ((hx*ry+rx*hy+dhx*dry+drx*dhy)*sin+
                   (hx*dry+rx*dhy-dhx*ry-drx*hy)*cos)
    kernel = gap**(-alpha/2)

    base = numerator*kernel
    variation = numerator_h*kernel-(alpha/2)*numerator*kernel/gap*gap_h
    base[:, singular] = 0.
    variation[:, singular] = 0.
    base, variation = base.dot(rule.weights), variation.dot(rule.weights)
    rx, hx = rx[:, 0], hx[:, 0]
    return -gsqgpatch.c_alpha(alpha)*circulation*(-hx*base/rx**2+variation/rx)
