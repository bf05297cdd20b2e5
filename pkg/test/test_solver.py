"""Test Newton iteration and continuation."""
from pytest import raises
import numpy

import gsqgpatch


def test_solver_config():
    config = gsqgpatch.SolverConfig(eps_schedule=[0, 0.01, -0.01, 0.02])
    assert config.eps_schedule == (0.0, 0.01, -0.01, 0.02)
    assert config.replace(order=8).grid.order == 8
    for changes in ({"eps_schedule": (0.01,)},
                    {"eps_schedule": (0.0, 0.5)},
                    {"damping": 0.0},
                    {"damping": 0.5, "damping_floor": 0.75},
                    {"tol_residual": 0.0},
                    {"max_newton_iters": -1}):
        with raises(ValueError):
            gsqgpatch.SolverConfig(**changes)
    with raises(gsqgpatch.GridError):
        gsqgpatch.SolverConfig(order=64, grid_size=128)


def test_newton_solve(asymmetric_geometry, small_config):
    geometry = asymmetric_geometry.with_eps(0.04)
    start = gsqgpatch.trivial_state(geometry, "corotating", 16)
    state, diagnostics = gsqgpatch.newton_solve(geometry, start, small_config)
    assert diagnostics.residual_norm <= 1e-10
    assert 1 <= diagnostics.newton_iters <= 6
    assert len(diagnostics.history) == diagnostics.newton_iters+1
    assert numpy.all(numpy.diff(diagnostics.history) < 0)
    assert diagnostics.condition is not None
    assert diagnostics.min_curvature > 0.5
    assert numpy.max(numpy.abs(state.p1.coeffs)) > 1e-10
    assert numpy.max(numpy.abs(state.p2.coeffs)) > 1e-10
    residual = gsqgpatch.assemble(state, geometry, small_config.grid)
    assert residual.norm() <= 1e-10


def test_newton_failures(asymmetric_geometry, small_config):
    geometry = asymmetric_geometry.with_eps(0.04)
    start = gsqgpatch.trivial_state(geometry, "corotating", 16)
    config = small_config.replace(tol_residual=1e-30, max_newton_iters=2)
    with raises(gsqgpatch.MaxIterationsError) as err:
        gsqgpatch.newton_solve(geometry, start, config)
    assert len(err.value.history) == 3
    degenerate = start.replace(p1=gsqgpatch.CosineSeries.mode(2, 16, -1e4))
    with raises(gsqgpatch.DegenerateBoundaryError):
        gsqgpatch.newton_solve(geometry, degenerate, small_config)


def test_continuation_reflection(asymmetric_geometry, small_config):
    config = small_config.replace(
        eps_schedule=(0, 0.01, -0.01, 0.02, -0.02, 0.04, -0.04))
    branch = gsqgpatch.continue_branch(asymmetric_geometry, "corotating", config)
    assert branch.complete
    assert numpy.all(branch.eps_values == [-0.04, -0.02, -0.01, 0, 0.01, 0.02, 0.04])
    report = gsqgpatch.reflection_check(branch)
    assert report.max_discrepancy <= 1e-9
    assert report.unmatched == ()
    assert len(report.discrepancies) == 3
    for entry in branch.entries:
        assert entry.diagnostics.residual_norm <= 1e-10
        assert entry.diagnostics.min_curvature > 0.5
    assert gsqgpatch.symmetric_reduction_check(
        asymmetric_geometry, branch).max_difference > 1e-10


def test_symmetric_reduction(small_config):
    geometry = gsqgpatch.PairGeometry(alpha=1.0, d=5.0)
    config = small_config.replace(eps_schedule=(0, 0.02, 0.04))
    branch = gsqgpatch.continue_branch(geometry, "corotating", config)
    report = gsqgpatch.symmetric_reduction_check(geometry, branch)
    assert report.max_difference <= 1e-9
    assert report.max_center_offset <= 1e-8
    assert numpy.max(numpy.abs(branch.entries[-1].state.p1.coeffs)) > 1e-10


def test_resolution_doubling(small_config):
    geometry = gsqgpatch.PairGeometry(
        alpha=1.5, b1=1.0, b2=0.5, gamma1=1.0, gamma2=2.0, d=5.0, eps=0.04)
    start = gsqgpatch.trivial_state(geometry, "corotating", 16)
    coarse, _ = gsqgpatch.newton_solve(geometry, start, small_config)
    fine, _ = gsqgpatch.newton_solve(
        geometry, start, small_config.replace(order=32, grid_size=128))
    assert abs(coarse.scalar1-fine.scalar1) <= 1e-8
    assert abs(coarse.scalar2-fine.scalar2) <= 1e-7
    fine = fine.resize(16)
    assert numpy.allclose(coarse.p1.coeffs, fine.p1.coeffs, rtol=0, atol=1e-9)
    assert numpy.allclose(coarse.p2.coeffs, fine.p2.coeffs, rtol=0, atol=1e-9)
    grid = small_config.grid
    assert gsqgpatch.convexity_check(coarse, geometry, grid).passed
    assert gsqgpatch.convexity_check(coarse, geometry, grid.refine()).passed


def test_traveling_branch(small_config):
    geometry = gsqgpatch.PairGeometry(alpha=1.5, b1=1.0, b2=0.5, d=5.0)
    config = small_config.replace(eps_schedule=(0, 0.02, 0.04, 0.08))
    branch = gsqgpatch.continue_branch(geometry, "traveling", config)
    assert branch.complete
    gamma2 = numpy.array([entry.state.scalar2 for entry in branch.entries])
    assert gamma2[0] == 1.0
    deviation = numpy.abs(gamma2-1.0)
    assert numpy.all(numpy.diff(deviation) > 0)
    speed = gsqgpatch.u_star(geometry)
    assert branch.entries[0].state.scalar1 == speed


def test_scaling_exponent(small_config):
    geometry = gsqgpatch.PairGeometry(alpha=1.0, b1=0.5, b2=0.5, d=2.5)
    config = small_config.replace(
        eps_schedule=(0, 0.01, 0.02, 0.04, 0.08, 0.16))
    branch = gsqgpatch.continue_branch(geometry, "corotating", config)
    assert branch.complete
    assert branch.scaling_exponent is not None
    fit = gsqgpatch.scaling_fit(branch)
    assert fit.exponent == branch.scaling_exponent
    assert fit.bound_holds


def test_continuation_stall(small_config):
    geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma2=2.0)
    config = small_config.replace(
        eps_schedule=(0, 0.3), tol_residual=1e-14, max_newton_iters=1,
        max_bisections=1)
    branch = gsqgpatch.continue_branch(geometry, "corotating", config)
    assert branch.status == "stalled"
    assert numpy.all(branch.eps_values == [0.0])
    with raises(gsqgpatch.GeometryError):
        gsqgpatch.continue_branch(
            gsqgpatch.PairGeometry(alpha=1.0, gamma2=-1.0), "corotating", config)
