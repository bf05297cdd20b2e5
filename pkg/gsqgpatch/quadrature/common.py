"""Quadrature configuration and scheme registry."""
import dataclasses
from typing import NamedTuple, Optional

import numpy

SCHEMES = {}
DEFAULT_NODES = 256


def implements(*schemes):
    """Register a singular quadrature rule under one or more scheme tags."""
    def decorator(rule):
        """Register function."""
        for scheme in schemes:
            SCHEMES[scheme] = rule
        return rule

    return decorator


class QuadratureConvergenceError(RuntimeError):
    """Doubling the quadrature resolution changed the result too much."""


class SingularRule(NamedTuple):
    """
    Nodes and weights for ``mean(G(s) |2 sin(s/2)|^(-alpha))``.

    The weights act on the desingularized integrand ``G``, which must vanish
    at ``s = 0``. If `aligned`, node ``m`` is the grid shift ``2 pi m/M``.
    """

    nodes: numpy.ndarray
    weights: numpy.ndarray
    aligned: bool


@dataclasses.dataclass(frozen=True)
class QuadratureConfig:
    """
    Quadrature settings.

    Attributes:
        scheme (str):
            Singular rule: "spectral" (default), "subtraction" or
            "gauss_jacobi_split".
        near_width (float):
            Half-width ``delta`` of the near field of "gauss_jacobi_split".
        near_nodes (int):
            Gauss-Jacobi nodes on each side of the singular point.
        far_nodes (Optional[int]):
            Far-field node count. `None` uses the collocation grid size, or
            `DEFAULT_NODES` outside of a grid.
        convergence_tol (float):
            Largest change tolerated by the doubling self-tests.
        taylor_threshold (float):
            Below this ``|eps|`` the ``1/eps`` prefactored terms use the
            integral form of the Taylor remainder.
        taylor_nodes (int):
            Gauss-Legendre nodes for that remainder integral.

    """

    scheme: str = "spectral"
    near_width: float = numpy.pi/8
    near_nodes: int = 64
    far_nodes: Optional[int] = None
    convergence_tol: float = 1e-8
    taylor_threshold: float = 1e-3
    taylor_nodes: int = 16

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError("unknown quadrature scheme %r; expected one of %s" % (
                self.scheme, sorted(SCHEMES)))
        if not 0 < self.near_width <= numpy.pi/4:
            raise ValueError("near_width in (0, pi/4] required; found %g" %
                             self.near_width)
        if self.near_nodes < 1 or (self.far_nodes is not None and self.far_nodes < 2):
            raise ValueError("near_nodes >= 1 and far_nodes >= 2 required; found %d, %s" % (
                self.near_nodes, self.far_nodes))
        if self.taylor_threshold < 0 or self.taylor_nodes < 1:
            raise ValueError("taylor_threshold >= 0 and taylor_nodes >= 1 required; found %g, %d" % (
                self.taylor_threshold, self.taylor_nodes))

    def doubled(self):
        """Same configuration with every node count doubled."""
        return dataclasses.replace(
            self, near_nodes=2*self.near_nodes,
            far_nodes=None if self.far_nodes is None else 2*self.far_nodes)


def self_weights(alpha, size, config=None):
    """
    Singular rule of the configured scheme.

    Args:
        alpha (float):
            Exponent of the weight ``|2 sin(s/2)|^(-alpha)``.
        size (int):
            Collocation grid size; the far-field count when `config` leaves
            it open.
        config (Optional[gsqgpatch.QuadratureConfig]):
            Settings; defaults apply if omitted.

    Returns:
        (gsqgpatch.quadrature.common.SingularRule):
            Nodes and weights.

    Examples:
        >>> rule = gsqgpatch.self_weights(1.0, 8)
        >>> rule.aligned, rule.nodes.shape
        (True, (8,))
        >>> bool(numpy.allclose(rule.weights, numpy.roll(rule.weights[::-1], 1)))
        True

    """
    config = QuadratureConfig() if config is None else config
    return SCHEMES[config.scheme](float(alpha), int(size), config)
