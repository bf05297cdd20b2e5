"""Test for `gsqgpatch.construct`."""
from hypothesis import given, strategies
from pytest import raises, warns
import numpy

import gsqgpatch


def test_check_geometry():
    with raises(gsqgpatch.GeometryError) as err:
        gsqgpatch.PairGeometry(alpha=2.0)
    assert err.value.field == "alpha"
    with raises(gsqgpatch.GeometryError) as err:
        gsqgpatch.PairGeometry(alpha=1.0, eps=0.5)
    assert err.value.field == "eps"
    with raises(gsqgpatch.GeometryError) as err:
        gsqgpatch.PairGeometry(alpha=1.0, b2=-1.0)
    assert err.value.field == "b2"
    with raises(gsqgpatch.GeometryError) as err:
        gsqgpatch.PairGeometry(alpha=1.0, b1=2.0, b2=0.5, d=5.0)
    assert err.value.field == "d"
    with raises(gsqgpatch.GeometryError):
        gsqgpatch.PairGeometry(alpha=1.0, gamma1=numpy.nan)
    geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma2=-1.0)
    gsqgpatch.check_geometry(geometry, "traveling")
    with raises(gsqgpatch.ZeroCirculationError):
        gsqgpatch.check_geometry(geometry, "corotating")


def test_check_grid():
    gsqgpatch.CollocationGrid(size=32, order=8)
    with raises(gsqgpatch.GridError):
        gsqgpatch.CollocationGrid(size=33, order=8)
    with raises(gsqgpatch.GridError):
        gsqgpatch.CollocationGrid(size=30, order=8)
    with raises(gsqgpatch.GridError):
        gsqgpatch.CollocationGrid(size=32, order=0)
    grid = gsqgpatch.CollocationGrid(size=32, order=8).refine()
    assert (grid.size, grid.order) == (64, 16)


@given(strategies.lists(strategies.floats(-10, 10, allow_nan=False),
                        min_size=8, max_size=8))
def test_project_to_sine(coeffs):
    grid = gsqgpatch.CollocationGrid(size=32, order=8)
    values = gsqgpatch.series_eval(gsqgpatch.SineSeries(coeffs), grid)
    series = gsqgpatch.project_to_sine(values, grid)
    assert numpy.allclose(series.coeffs, coeffs, rtol=0, atol=1e-10)


def test_project_parity():
    grid = gsqgpatch.CollocationGrid(size=16, order=4)
    x = grid.points
    series, leak = gsqgpatch.project_to_sine(
        numpy.sin(3*x), grid, return_leak=True)
    assert leak < 1e-14
    assert numpy.allclose(series.coeffs, [0, 0, 1, 0])
    with warns(gsqgpatch.ParityWarning):
        series, leak = gsqgpatch.project_to_sine(
            numpy.sin(x)+1e-3*numpy.cos(2*x), grid, return_leak=True)
    assert numpy.allclose(series.coeffs, [1, 0, 0, 0])
    assert numpy.isclose(leak, 1e-3/numpy.sqrt(2))
    assert numpy.isclose(gsqgpatch.parity_leak(numpy.ones(8)), 1.0)


def test_series_eval_deriv():
    grid = gsqgpatch.CollocationGrid(size=16, order=4)
    x = grid.points
    series = gsqgpatch.CosineSeries([0.0, 0.5, 0.0, 0.25])
    assert numpy.allclose(gsqgpatch.series_eval_deriv(series, grid),
                          -numpy.sin(2*x)-numpy.sin(4*x))


def test_radius_profile():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=-0.2, b2=0.5)
    grid = gsqgpatch.CollocationGrid(size=16, order=4)
    p = gsqgpatch.CosineSeries([0.0, 3.0])
    radius = gsqgpatch.radius_profile(p, geometry, 2, grid)
    eta = -0.2*0.2*0.5**2
    assert numpy.allclose(radius, 1+eta*3*numpy.cos(2*grid.points))
    assert numpy.allclose(gsqgpatch.radius_at(p, geometry, 2, grid.points), radius)


def test_degenerate_radius():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
    grid = gsqgpatch.CollocationGrid(size=16, order=4)
    p = gsqgpatch.CosineSeries([0.0, -200.0])
    radius = gsqgpatch.radius_profile(p, geometry, 1, grid)
    with raises(gsqgpatch.DegenerateBoundaryError):
        gsqgpatch.check_radius(radius, 1)
    with raises(gsqgpatch.DegenerateBoundaryError):
        gsqgpatch.check_radius([1.0, numpy.inf], 2)
    assert numpy.all(gsqgpatch.check_radius([0.5, 1.5], 1) == [0.5, 1.5])


def test_trivial_state():
    geometry = gsqgpatch.PairGeometry(
        alpha=1.5, gamma1=2.0, gamma2=1.0, d=2.0, b1=0.4, b2=0.4)
    state = gsqgpatch.trivial_state(geometry, "corotating", 4)
    c_alpha = gsqgpatch.c_alpha(1.5)
    assert numpy.isclose(state.scalar1, 1.5*c_alpha*3/(2*2**3.5))
    assert numpy.isclose(state.scalar2, 2/3)
    assert not numpy.any(state.p1.coeffs) and not numpy.any(state.p2.coeffs)
    state = gsqgpatch.trivial_state(geometry, "traveling", 4)
    assert numpy.isclose(state.scalar1, 1.5*c_alpha*2/(2*2**2.5))
    assert state.scalar2 == 2.0
    with raises(gsqgpatch.ZeroCirculationError):
        gsqgpatch.trivial_state(
            gsqgpatch.PairGeometry(alpha=1.0, gamma2=-1.0), "corotating", 4)
