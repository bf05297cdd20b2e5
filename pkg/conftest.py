"""Global configuration."""
import pytest
import numpy

import gsqgpatch

ALPHAS = [0.5, 1.0, 1.25, 1.5, 1.75]


@pytest.fixture(params=ALPHAS)
def alpha(request):
    return request.param


@pytest.fixture(params=gsqgpatch.MODES)
def mode(request):
    return request.param


@pytest.fixture
def small_config():
    """Coarse solver settings, fast enough for continuation tests."""
    return gsqgpatch.SolverConfig(
        order=16, grid_size=64, tol_residual=1e-10, max_newton_iters=12)


@pytest.fixture
def asymmetric_geometry():
    """Unequal patches, well separated."""
    return gsqgpatch.PairGeometry(
        alpha=1.5, b1=1.0, b2=0.5, gamma1=1.0, gamma2=2.0, d=10.0)


@pytest.fixture(autouse=True)
def doctest_variables(doctest_namespace):
    """Ensure certain variables are available during doctests."""
    doctest_namespace["numpy"] = numpy
    doctest_namespace["gsqgpatch"] = gsqgpatch
