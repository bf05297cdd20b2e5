"""Newton and continuation settings."""
import dataclasses
from typing import Tuple

import numpy

import gsqgpatch


@dataclasses.dataclass(frozen=True)
class SolverConfig:
    """
    Settings of `newton_solve` and `continue_branch`.

    Attributes:
        tol_residual (float):
            Target Euclidean norm of the sine coefficients of the residual.
        max_newton_iters (int):
            Newton steps before giving up.
        eps_schedule (Tuple[float, ...]):
            Values of ``eps`` to visit, starting at 0 and non-decreasing in
            ``|eps|``.
        damping (float):
            Initial step length in ``(0, 1]``.
        damping_floor (float):
            Smallest step length tried before accepting a non-decreasing
            step.
        order (int):
            Truncation order ``N`` of the perturbations.
        grid_size (int):
            Collocation grid size ``M``.
        quadrature (gsqgpatch.QuadratureConfig):
            Quadrature settings.
        fd_step (float):
            Relative step of the finite-difference Jacobian.
        max_bisections (int):
            Times a failed ``eps`` step is halved before the branch stalls.
        parity_tol (float):
            Even content tolerated in assembled residuals.
        condition_limit (float):
            Jacobians with a larger condition number are singular.

    Examples:
        >>> config = gsqgpatch.SolverConfig(order=16, grid_size=64)
        >>> config.grid.size, config.grid.order
        (64, 16)
        >>> gsqgpatch.SolverConfig(eps_schedule=(0.0, 0.02, 0.01))
        Traceback (most recent call last):
            ...
        ValueError: eps_schedule must start at 0 and be non-decreasing in |eps|; found (0.0, 0.02, 0.01)

    """

    tol_residual: float = 1e-10
    max_newton_iters: int = 20
    eps_schedule: Tuple[float, ...] = (0.0,)
    damping: float = 1.0
    damping_floor: float = 1/16
    order: int = 64
    grid_size: int = 512
    quadrature: "gsqgpatch.QuadratureConfig" = dataclasses.field(
        default_factory=lambda: gsqgpatch.QuadratureConfig())
    fd_step: float = 1e-6
    max_bisections: int = 4
    parity_tol: float = 1e-9
    condition_limit: float = 1e14

    def __post_init__(self):
        schedule = tuple(float(eps) for eps in self.eps_schedule)
        object.__setattr__(self, "eps_schedule", schedule)
        magnitudes = numpy.abs(schedule)
        if (not schedule or schedule[0] != 0 or
                numpy.any(numpy.diff(magnitudes) < 0)):
            raise ValueError(
                "eps_schedule must start at 0 and be non-decreasing in |eps|; "
                "found %s" % (schedule,))
        if numpy.any(magnitudes >= 0.5):
            raise ValueError("eps_schedule values in (-1/2, 1/2) required; found %s" % (
                schedule,))
        if not 0 < self.damping_floor <= self.damping <= 1:
            raise ValueError("0 < damping_floor <= damping <= 1 required; found %g, %g" % (
                self.damping_floor, self.damping))
        if self.tol_residual <= 0:
            raise ValueError("tol_residual > 0 required; found %g" % self.tol_residual)
        if self.max_newton_iters < 0 or self.max_bisections < 0:
            raise ValueError(
                "max_newton_iters >= 0 and max_bisections >= 0 required; found %d, %d" % (
                    self.max_newton_iters, self.max_bisections))
        gsqgpatch.CollocationGrid(self.grid_size, self.order)

    @property
    def grid(self):
        """Collocation grid of size `grid_size` for order `order`."""
        return gsqgpatch.CollocationGrid(self.grid_size, self.order)

    def replace(self, **changes):
        """Copy with some fields replaced."""
        return dataclasses.replace(self, **changes)
