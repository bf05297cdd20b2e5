"""Tangent vectors of the solver unknowns."""
import dataclasses

import numpy

import gsqgpatch


@dataclasses.dataclass(frozen=True)
class TrivialTangent:
    """
    Direction ``h = (beta1, beta2, h1, h2)`` in the space of unknowns.

    Attributes:
        beta1, beta2 (float):
            Variations of the two scalars: ``(Omega, xbar)`` or
            ``(U, gamma2)``.
        h1, h2 (gsqgpatch.CosineSeries):
            Variations of the perturbations.

    """

    beta1: float
    beta2: float
    h1: "gsqgpatch.CosineSeries"
    h2: "gsqgpatch.CosineSeries"

    @property
    def order(self):
        """Truncation order of the directions."""
        return self.h1.order

    def to_vector(self):
        """Pack in the unknown ordering of `SolveState.to_vector`."""
        return numpy.concatenate([
            [self.beta1, self.beta2], self.h1.coeffs[1:], self.h2.coeffs[1:]])

    @classmethod
    def from_vector(cls, vector, order):
        """Inverse of `to_vector`; mode-1 coefficients are zero."""
        vector = numpy.asarray(vector, dtype=float)
        assert vector.shape == (2*order,), (vector.shape, order)
        return cls(float(vector[0]), float(vector[1]),
                   gsqgpatch.CosineSeries(numpy.concatenate([[0.], vector[2:order+1]])),
                   gsqgpatch.CosineSeries(numpy.concatenate([[0.], vector[order+1:]])))

    @classmethod
    def zeros(cls, order):
        """The zero direction."""
        zero = gsqgpatch.CosineSeries.zeros(order)
        return cls(0., 0., zero, zero)
