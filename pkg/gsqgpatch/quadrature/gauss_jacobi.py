"""Gauss-Jacobi near field with Gauss-Legendre far field."""
import numpy
import scipy.special

from .common import implements, SingularRule


@implements("gauss_jacobi_split")
def gauss_jacobi_rule(alpha, size, config):
    """
    Split the circle around the singular point.

    On ``[0, delta]`` and ``[-delta, 0]`` the integrand is
    ``(G(s) |2 sin(s/2)|^(-alpha) |s|^(alpha-1)) |s|^(1-alpha)``, the
    bracket being smooth; Gauss-Jacobi nodes for the weight ``|s|^(1-alpha)``
    handle it. The far field ``[delta, 2 pi - delta]`` is smooth and uses
    Gauss-Legendre nodes.

    Args:
        alpha (float):
            Weight exponent.
        size (int):
            Far-field node count unless `config.far_nodes` is set.
        config (gsqgpatch.QuadratureConfig):
            Provides `near_width`, `near_nodes` and `far_nodes`.

    Returns:
        (gsqgpatch.quadrature.common.SingularRule):
            Rule with nodes off the collocation grid.

    """
    delta = config.near_width
    exponent = 1-alpha
    unit, unit_weights = scipy.special.roots_jacobi(config.near_nodes, 0., exponent)
    near = delta*(1+unit)/2
    near_weights = (unit_weights*(delta/2)**(1+exponent)*
                    numpy.abs(2*numpy.sin(near/2))**-alpha*near**-exponent)

    far_count = size if config.far_nodes is None else config.far_nodes
    legendre, legendre_weights = numpy.polynomial.legendre.leggauss(far_count)
    far = delta+(numpy.pi-delta)*(1+legendre)
    far_weights = (legendre_weights*(numpy.pi-delta)*
                   numpy.abs(2*numpy.sin(far/2))**-alpha)

    nodes = numpy.concatenate([near, -near, far])
    weights = numpy.concatenate([near_weights, near_weights, far_weights])/(2*numpy.pi)
    return SingularRule(nodes, weights, False)
