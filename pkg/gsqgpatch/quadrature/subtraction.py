"""Trapezoid rule after removing the odd local model."""
import numpy

from .common import implements, SingularRule


@implements("subtraction")
def subtraction_rule(alpha, size, config):
    """
    Periodic trapezoid rule on the remainder of a local subtraction.

    Near ``s = 0`` the integrand behaves as ``G'(0) sin(s)|2 sin(s/2)|^(-alpha)``,
    which is odd and has zero mean. Subtracting it leaves a continuous
    remainder vanishing at the singular node; on a symmetric grid the
    subtracted model sums to zero, so the rule is the trapezoid rule with
    the singular node weighted by its limit, zero. Converges like
    ``M^(alpha-3)``.
    """
    del config
    nodes = 2*numpy.pi*numpy.arange(size)/size
    chord = numpy.abs(2*numpy.sin(nodes[1:]/2))
    weights = numpy.concatenate([[0.0], chord**-alpha])/size
    weights.setflags(write=False)
    return SingularRule(nodes, weights, True)
