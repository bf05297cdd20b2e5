"""Value types shared by every part of the package."""
import dataclasses
from typing import Optional, Tuple

import numpy

import gsqgpatch

MODES = ("corotating", "traveling")

SCALAR_NAMES = {
    # Meaning of (scalar1, scalar2) in each mode.
    "corotating": ("omega", "xbar"),
    "traveling": ("speed", "gamma2"),
}


@dataclasses.dataclass(frozen=True)
class PairGeometry:
    """
    Physical parameters of a vortex-patch pair.

    Patch 1 is centered at the origin, patch 2 at ``(d, 0)``. Both are
    perturbations of disks of radius ``|eps| b_i``.

    Attributes:
        alpha (float):
            Exponent of the velocity kernel, in ``(0, 2)``.
        eps (float):
            Signed patch size parameter, in ``(-1/2, 1/2)``.
        b1, b2 (float):
            Radius scale of each patch.
        gamma1, gamma2 (float):
            Vorticity magnitudes. In traveling mode `gamma2` is an unknown
            and the stored value is ignored.
        d (float):
            Distance between the patch centers. Must exceed ``2(b1+b2)``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
        >>> geometry.eta(1)
        0.010000000000000002
        >>> geometry.with_eps(-0.1).eta(1)
        -0.010000000000000002
        >>> gsqgpatch.PairGeometry(alpha=1.0, eps=0.1, d=1.0)
        Traceback (most recent call last):
            ...
        gsqgpatch.construct.geometry.GeometryError: d > 2(b1+b2) required; found d=1, b1=1, b2=1

    """

    alpha: float
    eps: float = 0.0
    b1: float = 1.0
    b2: float = 1.0
    gamma1: float = 1.0
    gamma2: float = 1.0
    d: float = 10.0

    def __post_init__(self):
        gsqgpatch.check_geometry(self)

    def scale(self, patch_index):
        """Radius scale ``b_i`` of a patch."""
        assert patch_index in (1, 2), patch_index
        return self.b1 if patch_index == 1 else self.b2

    def circulation(self, patch_index):
        """Vorticity magnitude ``gamma_i`` of a patch."""
        assert patch_index in (1, 2), patch_index
        return self.gamma1 if patch_index == 1 else self.gamma2

    def eta(self, patch_index):
        """Signed amplitude ``eps |eps|^alpha b_i^(1+alpha)`` of the perturbation."""
        return (self.eps*abs(self.eps)**self.alpha*
                self.scale(patch_index)**(1+self.alpha))

    def eta_ratio(self, patch_index):
        """The quotient ``eta_i/eps = |eps|^alpha b_i^(1+alpha)``, finite at 0."""
        return abs(self.eps)**self.alpha*self.scale(patch_index)**(1+self.alpha)

    def with_eps(self, eps):
        """Same geometry with another patch size parameter."""
        return dataclasses.replace(self, eps=float(eps))


class _Series(object):
    """Common base for the even and odd truncated Fourier series."""

    parity = None

    def __init__(self, coeffs):
        coeffs = numpy.array(coeffs, dtype=float).ravel()
        coeffs.setflags(write=False)
        self._coeffs = coeffs

    @property
    def coeffs(self):
        """Coefficients of modes ``1..N``, read-only."""
        return self._coeffs

    @property
    def order(self):
        """Truncation order ``N``."""
        return len(self._coeffs)

    @property
    def modes(self):
        """Mode numbers ``1..N``."""
        return numpy.arange(1, self.order+1)

    def _basis(self, angles):
        raise NotImplementedError

    def __call__(self, x):
        """Evaluate by direct summation at arbitrary points."""
        x = numpy.asarray(x, dtype=float)
        return self._basis(numpy.multiply.outer(x, self.modes)).dot(self._coeffs)

    def resize(self, order):
        """Truncate or zero-pad to another order."""
        coeffs = numpy.zeros(order)
        size = min(order, self.order)
        coeffs[:size] = self._coeffs[:size]
        return type(self)(coeffs)

    def __eq__(self, other):
        return (type(self) is type(other) and
                numpy.array_equal(self._coeffs, other.coeffs))

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs.tobytes()))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self._coeffs.tolist())

    @classmethod
    def zeros(cls, order):
        """Series of given order with all coefficients zero."""
        return cls(numpy.zeros(order))

    @classmethod
    def mode(cls, j, order, amplitude=1.0):
        """Series consisting of a single mode ``j``."""
        assert 1 <= j <= order, (j, order)
        coeffs = numpy.zeros(order)
        coeffs[j-1] = amplitude
        return cls(coeffs)


class CosineSeries(_Series):
    """
    Even perturbation ``p(x) = sum_j a_j cos(j x)``, ``j = 1..N``.

    Examples:
        >>> series = gsqgpatch.CosineSeries([0.0, 1.0])
        >>> series.order
        2
        >>> float(series(0.0))
        1.0
        >>> series.derivative()
        SineSeries([0.0, -2.0])

    """

    parity = "even"

    def _basis(self, angles):
        return numpy.cos(angles)

    def derivative(self):
        """Derivative ``-sum_j j a_j sin(j x)``."""
        return SineSeries(-self.modes*self._coeffs+0.0)


class SineSeries(_Series):
    """
    Odd function ``r(x) = sum_j A_j sin(j x)``, ``j = 1..N``.

    Examples:
        >>> series = gsqgpatch.SineSeries([2.0, 0.0, 0.0, 0.5])
        >>> float(series(0.0))
        0.0
        >>> series.derivative().coeffs
        array([2., 0., 0., 2.])

    """

    parity = "odd"

    def _basis(self, angles):
        return numpy.sin(angles)

    def derivative(self):
        """Derivative ``sum_j j A_j cos(j x)``."""
        return CosineSeries(self.modes*self._coeffs)


@dataclasses.dataclass(frozen=True)
class CollocationGrid:
    """
    Uniform collocation grid ``x_m = 2 pi m/M`` on the circle.

    Attributes:
        size (int):
            Number of points ``M``. Even, and at least ``4 order``.
        order (int):
            Truncation order ``N`` of the series living on the grid.

    Examples:
        >>> grid = gsqgpatch.CollocationGrid(size=8, order=2)
        >>> grid.points[:3].round(4)
        array([0.    , 0.7854, 1.5708])

    """

    size: int
    order: int

    def __post_init__(self):
        gsqgpatch.check_grid(self)

    @property
    def points(self):
        """The collocation points."""
        return 2*numpy.pi*numpy.arange(self.size)/self.size

    def refine(self, factor=2):
        """Grid with both size and order multiplied by `factor`."""
        return CollocationGrid(self.size*factor, self.order*factor)


@dataclasses.dataclass(frozen=True)
class SolveState:
    """
    Unknowns of the co-rotating or traveling system.

    Attributes:
        mode (str):
            Either "corotating" or "traveling".
        scalar1 (float):
            Angular velocity ``Omega`` (co-rotating) or speed ``U`` (traveling).
        scalar2 (float):
            Rotation center ``xbar`` (co-rotating) or the second vorticity
            magnitude ``gamma2`` (traveling).
        p1, p2 (gsqgpatch.CosineSeries):
            Boundary perturbations. Mode 1 is absorbed by the scalars and
            must vanish.

    """

    mode: str
    scalar1: float
    scalar2: float
    p1: CosineSeries
    p2: CosineSeries

    def __post_init__(self):
        assert self.mode in MODES, self.mode
        if self.p1.order != self.p2.order:
            raise ValueError("perturbation orders differ: %d != %d" % (
                self.p1.order, self.p2.order))
        if self.p1.coeffs[0] != 0 or self.p2.coeffs[0] != 0:
            raise ValueError("mode-1 coefficients must vanish; found %g, %g" % (
                self.p1.coeffs[0], self.p2.coeffs[0]))

    @property
    def order(self):
        """Truncation order of the perturbations."""
        return self.p1.order

    def perturbation(self, patch_index):
        """Perturbation ``p_i`` of a patch."""
        assert patch_index in (1, 2), patch_index
        return self.p1 if patch_index == 1 else self.p2

    def to_vector(self):
        """
        Pack into solver coordinates.

        The ordering is ``(scalar1, scalar2, a_2..a_N of p1, a_2..a_N of p2)``.

        Examples:
            >>> state = gsqgpatch.SolveState(
            ...     "corotating", 0.5, 1.0,
            ...     gsqgpatch.CosineSeries([0, 2, 3]),
            ...     gsqgpatch.CosineSeries([0, 4, 5]))
            >>> state.to_vector()
            array([0.5, 1. , 2. , 3. , 4. , 5. ])

        """
        return numpy.concatenate([
            [self.scalar1, self.scalar2], self.p1.coeffs[1:], self.p2.coeffs[1:]])

    @classmethod
    def from_vector(cls, mode, vector, order):
        """Inverse of `to_vector`."""
        vector = numpy.asarray(vector, dtype=float)
        assert vector.shape == (2*order,), (vector.shape, order)
        p1 = numpy.concatenate([[0.0], vector[2:order+1]])
        p2 = numpy.concatenate([[0.0], vector[order+1:]])
        return cls(mode, float(vector[0]), float(vector[1]),
                   CosineSeries(p1), CosineSeries(p2))

    def resize(self, order):
        """Truncate or zero-pad both perturbations."""
        return self.replace(p1=self.p1.resize(order), p2=self.p2.resize(order))

    def replace(self, **changes):
        """Copy with some fields replaced."""
        return dataclasses.replace(self, **changes)


@dataclasses.dataclass(frozen=True)
class ResidualPair:
    """
    Sine-series residuals of both patches.

    Attributes:
        r1, r2 (gsqgpatch.SineSeries):
            Residual of patch 1 and patch 2.
        parity_leak (float):
            Root-mean-square of the even content discarded when projecting.

    """

    r1: SineSeries
    r2: SineSeries
    parity_leak: float = 0.0

    def to_vector(self):
        """Concatenated coefficients ``(A_1..A_N, B_1..B_N)``."""
        return numpy.concatenate([self.r1.coeffs, self.r2.coeffs])

    @classmethod
    def from_vector(cls, vector):
        """Inverse of `to_vector`."""
        vector = numpy.asarray(vector, dtype=float)
        half = len(vector)//2
        return cls(SineSeries(vector[:half]), SineSeries(vector[half:]))

    def norm(self):
        """Euclidean norm over all sine coefficients."""
        return float(numpy.linalg.norm(self.to_vector()))


@dataclasses.dataclass(frozen=True)
class BranchEntry:
    """Converged state at one value of ``eps``."""

    eps: float
    state: SolveState
    diagnostics: "gsqgpatch.Diagnostics"


@dataclasses.dataclass(frozen=True)
class SolutionBranch:
    """
    Converged states along an ``eps`` continuation.

    Attributes:
        geometry (gsqgpatch.PairGeometry):
            Parameters shared by all entries; the ``eps`` field is per entry.
        mode (str):
            Either "corotating" or "traveling".
        entries (Tuple[gsqgpatch.BranchEntry, ...]):
            Entries sorted by ``eps``.
        grid_size (int):
            Collocation grid size used by the solves.
        tol_residual (float):
            Residual tolerance every entry satisfies.
        status (str):
            "complete", "stalled" (Newton failed after bisection) or
            "degenerate" (a boundary stopped being star-shaped).
        scaling_exponent (Optional[float]):
            Fitted exponent of the scalar deviation from the point-vortex
            value, when enough entries are present.

    """

    geometry: PairGeometry
    mode: str
    entries: Tuple[BranchEntry, ...]
    grid_size: int
    tol_residual: float
    status: str = "complete"
    scaling_exponent: Optional[float] = None

    def __post_init__(self):
        assert self.mode in MODES, self.mode
        object.__setattr__(self, "entries", tuple(
            sorted(self.entries, key=lambda entry: entry.eps)))

    @property
    def complete(self):
        """True if every scheduled value converged."""
        return self.status == "complete"

    @property
    def eps_values(self):
        """The ``eps`` of every entry."""
        return numpy.array([entry.eps for entry in self.entries])

    def replace(self, **changes):
        """Copy with some fields replaced."""
        return dataclasses.replace(self, **changes)
