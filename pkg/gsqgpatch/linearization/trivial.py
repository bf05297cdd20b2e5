"""Linearization at the point-vortex state and its inverse."""
import numpy

import gsqgpatch


class SingularBlockError(ValueError):
    """A block of the trivial linearization is not invertible."""


def _mode_weights(geometry, order):
    """``j sigma_j`` for ``j = 1..order``."""
    table = gsqgpatch.multiplier_table(geometry.alpha, order)
    return numpy.arange(1, order+1)*table.sigma


def _coupling(geometry):
    """Sensitivity ``alpha C_alpha/(2 d^(1+alpha))`` of the cross velocity to gamma."""
    alpha = geometry.alpha
    return alpha*gsqgpatch.c_alpha(alpha)/(2*geometry.d**(1+alpha))


def trivial_apply(tangent, geometry, mode):
    """
    Apply the linearization at the trivial state.

    Co-rotating, around ``(Omega*, xbar*, 0, 0)``:
    ``(-beta1 xbar* - beta2 Omega*, -beta1 (d - xbar*) + beta2 Omega*)`` on
    ``sin(x)`` and ``-j sigma_j (gamma1 a_j, gamma2 b_j)`` on ``sin(jx)``.

    Traveling, around ``(U*, gamma1, 0, 0)``:
    ``(-beta1 + c beta2, -beta1)`` on ``sin(x)`` with
    ``c = alpha C_alpha/(2 d^(1+alpha))``, and
    ``+j sigma_j gamma1 (a_j, b_j)`` on ``sin(jx)``.

    Args:
        tangent (gsqgpatch.TrivialTangent):
            Direction to apply to.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters; ``eps`` is not used.
        mode (str):
            Either "corotating" or "traveling".

    Returns:
        (gsqgpatch.ResidualPair):
            Image of the direction, of the same order.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0, d=6.0)
        >>> tangent = gsqgpatch.TrivialTangent(
        ...     1.0, 0.0, gsqgpatch.CosineSeries.zeros(3),
        ...     gsqgpatch.CosineSeries.zeros(3))
        >>> image = gsqgpatch.trivial_apply(tangent, geometry, "corotating")
        >>> image.r1.coeffs.round(12)+0.0, image.r2.coeffs.round(12)+0.0
        (array([-2.,  0.,  0.]), array([-4.,  0.,  0.]))

    """
    order = tangent.order
    weights = _mode_weights(geometry, order)
    first, second = tangent.h1.coeffs, tangent.h2.coeffs
    if mode == "corotating":
        omega = gsqgpatch.omega_star(geometry)
        xbar = gsqgpatch.xbar_star(geometry)
        image1 = -weights*geometry.gamma1*first
        image2 = -weights*geometry.gamma2*second
        image1[0] += -tangent.beta1*xbar-tangent.beta2*omega
        image2[0] += -tangent.beta1*(geometry.d-xbar)+tangent.beta2*omega
    else:
        assert mode == "traveling", mode
        image1 = weights*geometry.gamma1*first
        image2 = weights*geometry.gamma1*second
        image1[0] += -tangent.beta1+_coupling(geometry)*tangent.beta2
        image2[0] += -tangent.beta1
    return gsqgpatch.ResidualPair(
        gsqgpatch.SineSeries(image1), gsqgpatch.SineSeries(image2))


def trivial_inverse(residual, geometry, mode):
    """
    Invert `trivial_apply`.

    The ``sin(x)`` block is a 2x2 system in ``(beta1, beta2)``; the
    ``sin(jx)`` blocks, ``j >= 2``, divide by ``-j sigma_j gamma_i``
    (co-rotating) or ``j sigma_j gamma1`` (traveling).

    Args:
        residual (gsqgpatch.ResidualPair):
            Right-hand side ``(A_j, B_j)``.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        mode (str):
            Either "corotating" or "traveling".

    Returns:
        (gsqgpatch.TrivialTangent):
            Direction with zero mode-1 coefficients.

    Raises:
        SingularBlockError:
            If a block is singular: ``gamma1 + gamma2 = 0`` or a vanishing
            ``gamma_i``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0, d=6.0)
        >>> residual = gsqgpatch.ResidualPair(
        ...     gsqgpatch.SineSeries([-2.0, 0.0]), gsqgpatch.SineSeries([-4.0, 0.0]))
        >>> tangent = gsqgpatch.trivial_inverse(residual, geometry, "corotating")
        >>> round(tangent.beta1, 12), round(tangent.beta2, 12)+0.0
        (1.0, 0.0)

    """
    order = residual.r1.order
    first, second = residual.r1.coeffs, residual.r2.coeffs
    if mode == "corotating":
        total = geometry.gamma1+geometry.gamma2
        if total == 0:
            raise SingularBlockError(
                "mode-1 block singular: gamma1 + gamma2 = 0 (determinant -Omega* d)")
        circulation1, circulation2 = -geometry.gamma1, -geometry.gamma2
        omega = gsqgpatch.omega_star(geometry)
        beta1 = -(first[0]+second[0])/geometry.d
        beta2 = -(geometry.gamma1*first[0]-geometry.gamma2*second[0])/(total*omega)
    else:
        assert mode == "traveling", mode
        circulation1 = circulation2 = geometry.gamma1
        beta1 = -second[0]
        beta2 = (first[0]-second[0])/_coupling(geometry)
    if order > 1 and (circulation1 == 0 or circulation2 == 0):
        raise SingularBlockError(
            "mode-j blocks singular: gamma1=%g, gamma2=%g" % (
                geometry.gamma1, geometry.gamma2))
    weights = _mode_weights(geometry, order)[1:]
    coeffs1 = numpy.concatenate([[0.], first[1:]/(weights*circulation1)])
    coeffs2 = numpy.concatenate([[0.], second[1:]/(weights*circulation2)])
    return gsqgpatch.TrivialTangent(
        float(beta1), float(beta2),
        gsqgpatch.CosineSeries(coeffs1), gsqgpatch.CosineSeries(coeffs2))


def trivial_matrix(geometry, mode, order):
    """
    Dense matrix of `trivial_apply` in solver coordinates.

    Columns follow ``(scalar1, scalar2, a_2..a_N, b_2..b_N)``, rows
    ``(A_1..A_N, B_1..B_N)``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.5)
        >>> matrix = gsqgpatch.trivial_matrix(geometry, "traveling", 4)
        >>> matrix.shape
        (8, 8)
        >>> bool(abs(numpy.linalg.det(matrix)) > 0)
        True

    """
    gsqgpatch.check_geometry(geometry, mode)
    size = 2*order
    matrix = numpy.empty((size, size))
    for column, unit in enumerate(numpy.eye(size)):
        tangent = gsqgpatch.TrivialTangent.from_vector(unit, order)
        matrix[:, column] = trivial_apply(tangent, geometry, mode).to_vector()
    return matrix
