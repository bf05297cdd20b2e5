"""Per-state diagnostics record."""
import dataclasses
from typing import Optional, Tuple


@dataclasses.dataclass(frozen=True)
class Diagnostics:
    """
    Quantities recorded for a converged state.

    Attributes:
        residual_norm (float):
            Final norm of the residual sine coefficients.
        min_curvature_1, min_curvature_2 (float):
            Smallest signed curvature of each boundary, in units of the
            patch radius.
        parity_leak (float):
            Even content discarded by the final projection.
        newton_iters (int):
            Newton steps taken.
        condition (Optional[float]):
            Condition number of the last Jacobian; `None` when no step was
            needed.
        history (Tuple[float, ...]):
            Residual norm before the first and after every step.
        scaling_exponent (Optional[float]):
            Branch level exponent, when attached to a branch summary.

    Examples:
        >>> record = gsqgpatch.Diagnostics(1e-12, 1.0, 1.0, 0.0, 0)
        >>> gsqgpatch.Diagnostics.from_dict(record.to_dict()) == record
        True

    """

    residual_norm: float
    min_curvature_1: float
    min_curvature_2: float
    parity_leak: float
    newton_iters: int
    condition: Optional[float] = None
    history: Tuple[float, ...] = ()
    scaling_exponent: Optional[float] = None

    @property
    def min_curvature(self):
        """Smallest curvature over both patches."""
        return min(self.min_curvature_1, self.min_curvature_2)

    def to_dict(self):
        """Plain dictionary with JSON compatible values."""
        values = dataclasses.asdict(self)
        values["history"] = list(self.history)
        return values

    @classmethod
    def from_dict(cls, values):
        """Inverse of `to_dict`."""
        values = dict(values)
        values["history"] = tuple(values.get("history", ()))
        return cls(**values)
