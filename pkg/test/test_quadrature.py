"""Test the singular quadrature rules and kernels."""
from pytest import raises
import numpy
import scipy.integrate
import scipy.special

import gsqgpatch


def smooth_part(s):
    """Even, analytic and zero at the singular point."""
    return numpy.exp(numpy.cos(s))-numpy.e


def singular_reference(alpha):
    value, _ = scipy.integrate.quad(
        lambda s: smooth_part(s)*(2*numpy.sin(s/2))**-alpha,
        0, numpy.pi, epsabs=1e-14, epsrel=1e-13, limit=200)
    return value/numpy.pi


def singular_integrand(alpha, center):
    def func(y):
        return (smooth_part(y-center)*
                numpy.abs(2*numpy.sin((y-center)/2))**-alpha)
    return func


def test_config():
    config = gsqgpatch.QuadratureConfig(far_nodes=10)
    assert config.doubled().far_nodes == 20
    assert config.doubled().near_nodes == 128
    assert gsqgpatch.QuadratureConfig().doubled().far_nodes is None
    with raises(ValueError, match="unknown quadrature scheme"):
        gsqgpatch.QuadratureConfig(scheme="trapezoid")
    with raises(ValueError, match="near_width"):
        gsqgpatch.QuadratureConfig(near_width=1.0)
    with raises(ValueError, match="far_nodes"):
        gsqgpatch.QuadratureConfig(far_nodes=1)
    with raises(ValueError, match="taylor"):
        gsqgpatch.QuadratureConfig(taylor_threshold=-1.0)
    assert set(gsqgpatch.SCHEMES) == {"spectral", "subtraction", "gauss_jacobi_split"}


def test_mean_smooth():
    value = gsqgpatch.mean_integral(lambda y: numpy.exp(numpy.cos(y)))
    assert numpy.isclose(value, scipy.special.i0(1.0), rtol=1e-14)
    value = gsqgpatch.mean_integral(
        lambda y: numpy.cos(y)**2, gsqgpatch.QuadratureConfig(far_nodes=8))
    assert numpy.isclose(value, 0.5)


def test_mean_spectral(alpha):
    reference = singular_reference(alpha)
    value = gsqgpatch.mean_integral(
        singular_integrand(alpha, 0.7), singular_point=0.7, alpha=alpha)
    assert numpy.isclose(value, reference, rtol=1e-10, atol=0)


def test_mean_gauss_jacobi(alpha):
    config = gsqgpatch.QuadratureConfig(scheme="gauss_jacobi_split")
    reference = singular_reference(alpha)
    value = gsqgpatch.mean_integral(
        singular_integrand(alpha, -1.2), config, singular_point=-1.2, alpha=alpha)
    assert numpy.isclose(value, reference, rtol=1e-9, atol=0)


def test_mean_subtraction():
    alpha = 1.5
    reference = singular_reference(alpha)
    errors = []
    for count in (128, 512):
        config = gsqgpatch.QuadratureConfig(scheme="subtraction", far_nodes=count)
        value = gsqgpatch.mean_integral(
            singular_integrand(alpha, 0.0), config, singular_point=0.0, alpha=alpha)
        errors.append(abs(value-reference))
    assert errors[1] < errors[0]/4
    assert errors[1] < 1e-3


def test_mean_nonvanishing_factor():
    alpha = 0.5
    exact = gsqgpatch.gamma_fn(0.5)/gsqgpatch.gamma_fn(0.75)**2
    reference, _ = scipy.integrate.quad(
        lambda s: numpy.exp(numpy.cos(s))*numpy.sinc(s/(2*numpy.pi))**-alpha,
        0, numpy.pi, weight="alg", wvar=(-alpha, 0), epsabs=1e-14, epsrel=1e-13)
    reference /= numpy.pi

    def weight(y):
        return numpy.abs(2*numpy.sin(y/2))**-alpha

    def shifted(y):
        return numpy.exp(numpy.cos(y-0.3))*weight(y-0.3)

    for scheme, rtol in (("spectral", 1e-10), ("gauss_jacobi_split", 1e-10),
                         ("subtraction", 1e-5)):
        config = gsqgpatch.QuadratureConfig(scheme=scheme, far_nodes=1024)
        value = gsqgpatch.mean_integral(weight, config, singular_point=0.0, alpha=alpha)
        assert numpy.isclose(value, exact, rtol=1e-12, atol=0), scheme
        value = gsqgpatch.mean_integral(shifted, config, singular_point=0.3, alpha=alpha)
        assert numpy.isclose(value, reference, rtol=rtol, atol=0), scheme
    with raises(ValueError, match="not integrable"):
        gsqgpatch.mean_integral(
            lambda y: numpy.abs(2*numpy.sin(y/2))**-1.5, singular_point=0.0, alpha=1.5)
    with raises(ValueError, match="not integrable"):
        gsqgpatch.weight_mean(1.0)


def test_mean_check():
    assert numpy.isclose(gsqgpatch.mean_integral(
        lambda y: numpy.exp(numpy.sin(y)), check=True), scipy.special.i0(1.0))
    with raises(gsqgpatch.QuadratureConvergenceError):
        gsqgpatch.mean_integral(lambda y: numpy.abs(numpy.sin(y)), check=True)


def test_spectral_moments():
    alpha, size = 1.25, 64
    rule = gsqgpatch.spectral_rule(alpha, size, None)
    assert rule.aligned
    moments = gsqgpatch.singular_moments(alpha, size//2)
    for k in range(1, size//2):
        assert numpy.isclose(rule.weights.dot(numpy.cos(k*rule.nodes)-1),
                             -moments[k], rtol=1e-12)
        assert abs(rule.weights.dot(numpy.sin(k*rule.nodes))) < 1e-13
    with raises(ValueError):
        rule.weights[0] = 0.


def test_rule_shapes():
    config = gsqgpatch.QuadratureConfig(scheme="gauss_jacobi_split", near_nodes=8)
    rule = gsqgpatch.self_weights(1.5, 32, config)
    assert not rule.aligned
    assert rule.nodes.shape == rule.weights.shape == (48,)
    assert numpy.all(numpy.abs(rule.nodes[:16]) <= numpy.pi/8)
    rule = gsqgpatch.self_weights(
        1.5, 32, gsqgpatch.QuadratureConfig(scheme="subtraction"))
    assert rule.aligned and rule.weights[0] == 0


def test_self_kernel_denominator():
    p = gsqgpatch.CosineSeries([0.0, 0.5, 0.2])
    x = numpy.linspace(0, 2*numpy.pi, 9)[:, numpy.newaxis]
    y = numpy.linspace(0.3, 5.0, 7)[numpy.newaxis]
    for eps in (0.2, -0.2):
        geometry = gsqgpatch.PairGeometry(alpha=1.3, eps=eps, b1=1.3)
        eta = geometry.eta(1)
        def curve(t):
            return eps*1.3*(1+eta*p(t))*numpy.exp(1j*t)
        expected = (numpy.abs(curve(x)-curve(y))/(abs(eps)*1.3))**1.3
        value = gsqgpatch.self_kernel_denominator(p, geometry, 1, x, y)
        assert numpy.allclose(value, expected, rtol=1e-12)
        assert numpy.allclose(value, gsqgpatch.self_kernel_denominator(
            p, geometry, 1, y, x))


def test_cross_kernel_denominator():
    geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.3, b2=0.5, d=6.0)
    grid = gsqgpatch.CollocationGrid(size=16, order=4)
    state = gsqgpatch.SolveState(
        "corotating", 0.0, 0.0, gsqgpatch.CosineSeries([0, 1.0, -0.5, 0]),
        gsqgpatch.CosineSeries([0, 0, 2.0, 0]))
    first = gsqgpatch.boundary_points(state, geometry, 1, grid)
    second = gsqgpatch.boundary_points(state, geometry, 2, grid)
    x = grid.points[:, numpy.newaxis]
    y = grid.points[numpy.newaxis]
    value = gsqgpatch.cross_kernel_denominator(state.p1, state.p2, geometry, 1, x, y)
    assert numpy.allclose(value, numpy.abs(
        first[:, numpy.newaxis]-second[numpy.newaxis])**1.5, rtol=1e-12)
    value = gsqgpatch.cross_kernel_denominator(state.p1, state.p2, geometry, 2, x, y)
    assert numpy.allclose(value, numpy.abs(
        second[:, numpy.newaxis]-first[numpy.newaxis])**1.5, rtol=1e-12)


def test_power_increment():
    value = numpy.linspace(-3, 3, 13)
    for scale in (0.1, 1e-3, -0.05):
        expected = ((1+scale*value)**-0.75-1)/scale
        assert numpy.allclose(gsqgpatch.power_increment(value, scale, 0.75),
                              expected, rtol=1e-10)
        assert numpy.allclose(
            gsqgpatch.power_increment(value, scale, 0.75, taylor=True),
            expected, rtol=1e-10)
    tiny = gsqgpatch.power_increment(value, 1e-12, 0.75, taylor=True)
    assert numpy.allclose(tiny, -0.75*value, rtol=1e-10)
    assert numpy.allclose(gsqgpatch.power_increment(value, 0.0, 0.75), -0.75*value)


def test_quadrature_selftest():
    geometry = gsqgpatch.PairGeometry(alpha=1.5, eps=0.1)
    grid = gsqgpatch.CollocationGrid(size=64, order=8)
    state = gsqgpatch.trivial_state(geometry, "corotating", 8).replace(
        p1=gsqgpatch.CosineSeries.mode(2, 8, 0.5),
        p2=gsqgpatch.CosineSeries.mode(3, 8, -0.25))
    assert gsqgpatch.quadrature_selftest(state, geometry, grid) < 1e-8
    config = gsqgpatch.QuadratureConfig(scheme="subtraction")
    with raises(gsqgpatch.QuadratureConvergenceError):
        gsqgpatch.quadrature_selftest(state, geometry, grid, config)
