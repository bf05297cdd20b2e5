"""Self-interaction term of a patch."""
import numpy

import gsqgpatch


def source_samples(series, values, grid, rule):
    """
    Values of `series` at ``x_n - s_m`` for every target and rule node.

    Args:
        series (gsqgpatch.CosineSeries, gsqgpatch.SineSeries):
            Series to sample.
        values (numpy.ndarray):
            The same series on `grid`, reused when the rule is aligned.
        grid (gsqgpatch.CollocationGrid):
            Target points ``x_n``.
        rule (gsqgpatch.quadrature.common.SingularRule):
            Nodes ``s_m``.

    Returns:
        (numpy.ndarray):
            Array of shape ``(M, len(rule.nodes))``.

    """
    if rule.aligned:
        index = numpy.subtract.outer(
            numpy.arange(grid.size), numpy.arange(len(rule.nodes))) % grid.size
        return values[index]
    return numpy.array([series(target-rule.nodes) for target in grid.points])


def self_interaction(perturbation, geometry, patch_index, grid,
                     quad=None, circulation=None):
    """
    Self-interaction of patch `patch_index` at the collocation points.

    With ``s = x - y``, ``eta`` the signed amplitude and ``R = 1 + eta p``,
    the term is ``-C_alpha gamma_i`` times the singular mean of

    ``p(y) sin(s) + R(y) sin(s) D
    + (p'(y) - p'(x)) cos(s) K
    + (eta p'(x)/R(x)) ((p(x) - p(y)) cos(s) + p'(y) sin(s)) K``

    against ``|2 sin(s/2)|^(-alpha)``, where ``K = (1 + eta e)^(-alpha/2)``
    is the relative kernel, ``D = (K - 1)/eta`` and
    ``e = p(x) + p(y) + eta p(x) p(y) + eta q^2`` with
    ``q = (p(x) - p(y))/(2 sin(s/2))``. Every summand vanishes at ``s = 0``
    and stays finite as ``eps -> 0``.

    Args:
        perturbation (gsqgpatch.CosineSeries):
            Boundary perturbation ``p_i``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        grid (gsqgpatch.CollocationGrid):
            Collocation points.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Singular rule and Taylor switch.
        circulation (Optional[float]):
            Vorticity magnitude; defaults to the geometry's ``gamma_i``.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Raises:
        DegenerateBoundaryError:
            If ``R_i`` is not positive or the boundary touches itself.

    """
    quad = gsqgpatch.QuadratureConfig() if quad is None else quad
    if circulation is None:
        circulation = geometry.circulation(patch_index)
    alpha = geometry.alpha
    eta = geometry.eta(patch_index)
    rule = gsqgpatch.self_weights(alpha, grid.size, quad)

    derivative = perturbation.derivative()
    target = gsqgpatch.series_eval(perturbation, grid)
    target_slope = gsqgpatch.series_eval(derivative, grid)
    target_radius = gsqgpatch.check_radius(1+eta*target, patch_index)
    source = source_samples(perturbation, target, grid, rule)
    source_slope = source_samples(derivative, target_slope, grid, rule)
    source_radius = gsqgpatch.check_radius(1+eta*source, patch_index)

    nodes = rule.nodes
    sin, cos = numpy.sin(nodes), numpy.cos(nodes)
    half_chord = 2*numpy.sin(nodes/2)
    singular = half_chord == 0
    half_chord[singular] = 1.

    target, target_slope = target[:, numpy.newaxis], target_slope[:, numpy.newaxis]
    quotient = (target-source)/half_chord
    excess = target+source+eta*target*source+eta*quotient**2
    if numpy.any(1+eta*excess <= 0):
        raise gsqgpatch.DegenerateBoundaryError(
            "boundary of patch %d intersects itself" % patch_index)
    increment = gsqgpatch.power_increment(
        excess, eta, alpha/2, taylor=abs(geometry.eps) < quad.taylor_threshold,
        nodes=quad.taylor_nodes)
    kernel = 1+eta*increment
    slope = eta*target_slope/target_radius[:, numpy.newaxis]

    integrand = (source*sin+source_radius*sin*increment+
                 (source_slope-target_slope)*cos*kernel+
                 slope*((target-source)*cos+source_slope*sin)*kernel)
    integrand[:, singular] = 0.
    return -gsqgpatch.c_alpha(alpha)*circulation*integrand.dot(rule.weights)


def eval_F_i2(state, geometry, patch_index, grid, quad=None):
    """
    Self-interaction term ``F_i2`` of a state.

    Args:
        state (gsqgpatch.SolveState):
            State providing ``p_i`` and, in traveling mode, ``gamma2``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        patch_index (int):
            Either 1 or 2.
        grid (gsqgpatch.CollocationGrid):
            Collocation points.
        quad (Optional[gsqgpatch.QuadratureConfig]):
            Quadrature settings.

    Returns:
        (numpy.ndarray):
            Values at ``grid.points``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> grid = gsqgpatch.CollocationGrid(size=32, order=8)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 8)
        >>> state = state.replace(p1=gsqgpatch.CosineSeries.mode(3, 8))
        >>> values = gsqgpatch.eval_F_i2(state, geometry, 1, grid)
        >>> coeffs = gsqgpatch.project_to_sine(values, grid).coeffs
        >>> bool(numpy.isclose(coeffs[2], -3*gsqgpatch.sigma_j(1.0, 3)))
        True

    """
    circulation = gsqgpatch.circulations(state, geometry)[patch_index-1]
    return self_interaction(state.perturbation(patch_index), geometry,
                            patch_index, grid, quad, circulation)
