"""Test linearized operators against finite differences."""
from pytest import raises
import numpy
import pytest

import gsqgpatch

ORDER = 6
GRID = gsqgpatch.CollocationGrid(size=32, order=ORDER)


@pytest.mark.parametrize("alpha", [1.0, 1.5])
def test_fd_matches_trivial(alpha, mode):
    geometry = gsqgpatch.PairGeometry(
        alpha=alpha, b1=1.0, b2=0.5, gamma1=1.0, gamma2=2.0, d=5.0)
    state = gsqgpatch.trivial_state(geometry, mode, ORDER)
    jacobian = gsqgpatch.fd_jacobian(state, geometry, GRID)
    expected = gsqgpatch.trivial_matrix(geometry, mode, ORDER)
    assert numpy.allclose(jacobian, expected, rtol=0, atol=1e-6)


def test_trivial_round_trip(mode):
    geometry = gsqgpatch.PairGeometry(
        alpha=1.25, b1=1.0, b2=0.5, gamma1=1.0, gamma2=2.0, d=5.0)
    vector = numpy.random.RandomState(1234).normal(size=2*ORDER)
    residual = gsqgpatch.ResidualPair.from_vector(vector)
    tangent = gsqgpatch.trivial_inverse(residual, geometry, mode)
    assert tangent.h1.coeffs[0] == tangent.h2.coeffs[0] == 0
    image = gsqgpatch.trivial_apply(tangent, geometry, mode).to_vector()
    assert numpy.allclose(image, vector, rtol=1e-10, atol=1e-12)
    matrix = gsqgpatch.trivial_matrix(geometry, mode, ORDER)
    assert numpy.allclose(matrix.dot(tangent.to_vector()), vector)


def test_trivial_block_structure(mode):
    geometry = gsqgpatch.PairGeometry(alpha=1.5, gamma2=3.0)
    matrix = gsqgpatch.trivial_matrix(geometry, mode, ORDER)
    for j in range(2, ORDER+1):
        for row, column in ((j-1, j), (ORDER+j-1, ORDER+j-1)):
            others = numpy.delete(matrix[row], column)
            assert not numpy.any(others)
            assert matrix[row, column] != 0
    assert not numpy.any(matrix[[0, ORDER], 2:])


def test_trivial_singular():
    residual = gsqgpatch.ResidualPair.from_vector(numpy.ones(2*ORDER))
    with raises(gsqgpatch.SingularBlockError):
        gsqgpatch.trivial_inverse(residual, gsqgpatch.PairGeometry(
            alpha=1.0, gamma2=-1.0), "corotating")
    with raises(gsqgpatch.SingularBlockError):
        gsqgpatch.trivial_inverse(residual, gsqgpatch.PairGeometry(
            alpha=1.0, gamma2=0.0), "corotating")
    with raises(gsqgpatch.SingularBlockError):
        gsqgpatch.trivial_inverse(residual, gsqgpatch.PairGeometry(
            alpha=1.0, gamma1=0.0), "traveling")


def test_tangent_vector():
    tangent = gsqgpatch.TrivialTangent.from_vector(numpy.arange(8.), 4)
    assert (tangent.beta1, tangent.beta2) == (0.0, 1.0)
    assert numpy.all(tangent.h1.coeffs == [0, 2, 3, 4])
    assert numpy.all(tangent.h2.coeffs == [0, 5, 6, 7])
    assert numpy.all(tangent.to_vector() == numpy.arange(8.))
    assert not numpy.any(gsqgpatch.TrivialTangent.zeros(4).to_vector())


def test_gateaux_matches_fd():
    geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.2, gamma1=1.5)
    grid = gsqgpatch.CollocationGrid(size=64, order=8)
    state = gsqgpatch.trivial_state(geometry, "corotating", 8).replace(
        p1=gsqgpatch.CosineSeries([0, 1.0, -0.5, 0.2, 0, 0, 0, 0]))
    direction = gsqgpatch.CosineSeries([0, 0.3, 0, -1.0, 0.5, 0, 0, 0])
    analytic = gsqgpatch.gateaux_self(state, geometry, 1, grid, direction)
    step = 1e-6
    def shifted(sign):
        coeffs = state.p1.coeffs+sign*step*direction.coeffs
        return gsqgpatch.eval_F_i2(state.replace(
            p1=gsqgpatch.CosineSeries(coeffs)), geometry, 1, grid)
    numeric = (shifted(1)-shifted(-1))/(2*step)
    scale = numpy.max(numpy.abs(analytic))
    assert numpy.max(numpy.abs(numeric-analytic)) < 1e-5*scale


def test_fd_step_convergence():
    geometry = gsqgpatch.PairGeometry(alpha=1.25, eps=0.2, d=5.0)
    state = gsqgpatch.trivial_state(geometry, "corotating", ORDER).replace(
        p1=gsqgpatch.CosineSeries.mode(2, ORDER, 0.5),
        p2=gsqgpatch.CosineSeries.mode(3, ORDER, -0.5))
    coarse = gsqgpatch.fd_jacobian(state, geometry, GRID, step=1e-4)
    fine = gsqgpatch.fd_jacobian(state, geometry, GRID, step=1e-6)
    assert numpy.allclose(coarse, fine, rtol=1e-6, atol=1e-8)


def test_fd_central_stencil():
    geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.15, d=5.0)
    state = gsqgpatch.trivial_state(geometry, "traveling", ORDER).replace(
        p1=gsqgpatch.CosineSeries.mode(2, ORDER, 0.5))
    step = 1e-3
    jacobian = gsqgpatch.fd_jacobian(state, geometry, GRID, step=step)
    center = state.to_vector()
    for column in (0, 1, 3, len(center)-1):
        delta = step*max(1., abs(center[column]))

        def shifted(sign, column=column, delta=delta):
            vector = center.copy()
            vector[column] += sign*delta
            moved = gsqgpatch.SolveState.from_vector("traveling", vector, ORDER)
            return gsqgpatch.assemble(moved, geometry, GRID,
                                      parity_tol=numpy.inf).to_vector()

        expected = (shifted(1)-shifted(-1))/(2*delta)
        assert numpy.allclose(jacobian[:, column], expected, rtol=1e-12, atol=1e-14)


def test_fd_nonfinite_residual():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
    state = gsqgpatch.trivial_state(geometry, "corotating", ORDER).replace(
        scalar1=numpy.inf)
    with raises(gsqgpatch.JacobianProbeError):
        gsqgpatch.fd_jacobian(state, geometry, GRID)
