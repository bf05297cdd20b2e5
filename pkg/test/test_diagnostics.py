"""Test checks of converged states and branches."""
import json

from pytest import raises
import numpy
import sympy

import gsqgpatch

RECORD = gsqgpatch.Diagnostics(1e-12, 1.0, 1.0, 0.0, 2, 10.0, (1e-4, 1e-12))


def make_branch(states, mode="corotating", geometry=None):
    geometry = gsqgpatch.PairGeometry(alpha=1.0) if geometry is None else geometry
    entries = [gsqgpatch.BranchEntry(eps, state, RECORD)
               for eps, state in states.items()]
    return gsqgpatch.SolutionBranch(geometry, mode, entries, 16, 1e-10)


def test_curvature_symbolic():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
    grid = gsqgpatch.CollocationGrid(size=32, order=4)
    x = sympy.Symbol("x")
    radius = 1+geometry.eta(1)*(sympy.cos(2*x)-0.5*sympy.cos(3*x))
    first = [sympy.diff(radius*sympy.cos(x), x), sympy.diff(radius*sympy.sin(x), x)]
    second = [sympy.diff(value, x) for value in first]
    curvature = ((first[0]*second[1]-first[1]*second[0])/
                 (first[0]**2+first[1]**2)**sympy.Rational(3, 2))
    expected = sympy.lambdify(x, curvature, "numpy")(grid.points)
    p = gsqgpatch.CosineSeries([0.0, 1.0, -0.5, 0.0])
    for index in (1, 2):
        value = gsqgpatch.signed_curvature(p, geometry, index, grid)
        assert numpy.allclose(value, expected, rtol=1e-12, atol=0)


def test_convexity_adversarial():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
    grid = gsqgpatch.CollocationGrid(size=16, order=2)
    state = gsqgpatch.trivial_state(geometry, "corotating", 2)
    report = gsqgpatch.convexity_check(
        state.replace(p1=gsqgpatch.CosineSeries([0, -50.0])), geometry, grid)
    assert not report.passed
    assert report.min_curvature_1 < 0
    assert report.min_curvature_2 == 1.0
    report = gsqgpatch.convexity_check(
        state.replace(p2=gsqgpatch.CosineSeries([0, -200.0])), geometry, grid)
    assert not report.passed
    assert report.min_curvature_2 == -numpy.inf


def test_diagnostics_record():
    assert RECORD.min_curvature == 1.0
    values = RECORD.to_dict()
    assert values["history"] == [1e-4, 1e-12]
    assert json.loads(json.dumps(values)) == values
    assert gsqgpatch.Diagnostics.from_dict(values) == RECORD


def test_scaling_fit():
    geometry = gsqgpatch.PairGeometry(alpha=1.5)
    zero = gsqgpatch.CosineSeries.zeros(2)
    star = gsqgpatch.u_star(geometry)
    states = {eps: gsqgpatch.SolveState("traveling", star-3*abs(eps)**1.5, 1.0, zero, zero)
              for eps in (0.0, 0.01, 0.02, 0.04, 0.08, -0.04)}
    fit = gsqgpatch.scaling_fit(make_branch(states, "traveling", geometry))
    assert numpy.isclose(fit.exponent, 1.5)
    assert fit.count == 4
    assert fit.residual < 1e-10
    assert fit.within_band and fit.bound_holds
    del states[0.01]
    with raises(gsqgpatch.InsufficientDataError):
        gsqgpatch.scaling_fit(make_branch(states, "traveling", geometry))


def test_reflection_fault():
    zero = gsqgpatch.CosineSeries.zeros(4)
    state = gsqgpatch.SolveState(
        "corotating", 1.0, 2.0, gsqgpatch.CosineSeries([0, 1e-3, 2e-3, 3e-3]), zero)
    mirrored = gsqgpatch.reflect_state(state)
    assert gsqgpatch.reflect_state(mirrored) == state
    assert numpy.all(mirrored.p1.coeffs == [0, -1e-3, 2e-3, -3e-3])
    report = gsqgpatch.reflection_check(make_branch({0.02: state, -0.02: mirrored}))
    assert report.max_discrepancy == 0
    faulty = mirrored.replace(p1=gsqgpatch.CosineSeries([0, -1e-3, 2e-3+1e-6, -3e-3]))
    report = gsqgpatch.reflection_check(make_branch(
        {0.02: state, -0.02: faulty, -0.03: state}))
    assert numpy.isclose(report.max_discrepancy, 1e-6)
    assert report.unmatched == (-0.03,)


def test_symmetry_report():
    zero = gsqgpatch.CosineSeries.zeros(3)
    state = gsqgpatch.SolveState(
        "corotating", 1.0, 4.5, gsqgpatch.CosineSeries([0, 1e-3, 0]), zero)
    geometry = gsqgpatch.PairGeometry(alpha=1.0)
    report = gsqgpatch.symmetric_reduction_check(
        geometry, make_branch({0.01: state}, geometry=geometry))
    assert report.max_difference == 1e-3
    assert report.max_center_offset == 0.5
    report = gsqgpatch.symmetric_reduction_check(
        geometry, make_branch({0.01: state.replace(mode="traveling")}, "traveling"))
    assert report.max_center_offset is None


def test_branch_report():
    geometry = gsqgpatch.PairGeometry(alpha=1.0, d=6.0)
    config = gsqgpatch.SolverConfig(
        order=8, grid_size=32, eps_schedule=(0, 0.02, -0.02))
    branch = gsqgpatch.continue_branch(geometry, "corotating", config)
    report, passed = gsqgpatch.branch_report(branch)
    assert passed and report["passed"]
    assert [entry["eps"] for entry in report["entries"]] == [-0.02, 0.0, 0.02]
    assert report["reflection"]["passed"]
    assert report["symmetric_reduction"]["passed"]
    assert "skipped" in report["scaling"]
    assert json.loads(json.dumps(report)) == report
    report, passed = gsqgpatch.branch_report(branch, recompute=True)
    assert passed

    zero = gsqgpatch.CosineSeries.zeros(8)
    broken = branch.entries[-1].state.replace(
        p1=gsqgpatch.CosineSeries.mode(2, 8, -2000.0), p2=zero)
    report, passed = gsqgpatch.branch_report(make_branch({0.02: broken}, geometry=geometry))
    assert not passed
    assert not report["entries"][0]["convex"]


def test_branch_report_scaling():
    geometry = gsqgpatch.PairGeometry(alpha=1.0)
    zero = gsqgpatch.CosineSeries.zeros(2)
    star = gsqgpatch.u_star(geometry)
    schedule = (0.0, 0.01, 0.02, 0.04, 0.08)
    states = {eps: gsqgpatch.SolveState("traveling", star-3*eps**2, 1.0, zero, zero)
              for eps in schedule}
    report, _ = gsqgpatch.branch_report(make_branch(states, "traveling", geometry))
    scaling = report["scaling"]
    assert numpy.isclose(scaling["exponent"], 2.0)
    assert not scaling["within_band"]
    assert scaling["bound_holds"]
    assert "bound_holds" in scaling["reason"]
    states = {eps: gsqgpatch.SolveState("traveling", star-3*eps**0.5, 1.0, zero, zero)
              for eps in schedule}
    report, passed = gsqgpatch.branch_report(make_branch(states, "traveling", geometry))
    assert not report["scaling"]["bound_holds"]
    assert not passed
