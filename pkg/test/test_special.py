"""Test gamma function, kernel constant and multipliers."""
from pytest import raises
import numpy
import scipy.integrate

import gsqgpatch


def test_gamma_fn():
    assert numpy.isclose(gsqgpatch.gamma_fn(5.0), 24.0, rtol=1e-15)
    # Gamma(3/4) to 20 digits
    assert numpy.isclose(gsqgpatch.gamma_fn(0.75), 1.2254167024651776451,
                         rtol=1e-15, atol=0)
    assert numpy.isclose(gsqgpatch.gamma_fn(-0.5), -2*numpy.sqrt(numpy.pi))
    with raises(gsqgpatch.GammaPoleError):
        gsqgpatch.gamma_fn(0.0)
    log_gamma, sign = gsqgpatch.signed_log_gamma(numpy.array([-0.5, 2.5]))
    assert numpy.all(sign == [-1, 1])
    assert numpy.allclose(numpy.exp(log_gamma),
                          [2*numpy.sqrt(numpy.pi), 0.75*numpy.sqrt(numpy.pi)])


def test_c_alpha():
    gamma = gsqgpatch.gamma_fn
    assert gsqgpatch.c_alpha(1.0) == 1.0
    assert numpy.isclose(gsqgpatch.c_alpha(1.5), gamma(0.75)*2**0.5/gamma(0.25))
    assert numpy.isclose(gsqgpatch.c_alpha(0.5), gamma(0.25)*2**-0.5/gamma(0.75))
    for alpha in (0.0, 2.0, -1.0):
        with raises(gsqgpatch.AlphaDomainError):
            gsqgpatch.c_alpha(alpha)


def test_singular_moments(alpha):
    moments = gsqgpatch.singular_moments(alpha, 6)
    assert moments[0] == 0
    for k in range(1, 7):
        value, _ = scipy.integrate.quad(
            lambda s: (1-numpy.cos(k*s))*(2*numpy.sin(s/2))**-alpha,
            0, numpy.pi, epsabs=1e-14, epsrel=1e-13, limit=200)
        assert numpy.isclose(moments[k], value/numpy.pi, rtol=1e-9, atol=0)


def test_sigma_contour(alpha):
    sigma = gsqgpatch.multiplier_table(alpha, 64).sigma
    assert sigma[0] == 0
    assert numpy.all(numpy.diff(sigma) > 0)
    moments = gsqgpatch.singular_moments(alpha, 64)
    assert numpy.allclose(sigma, gsqgpatch.c_alpha(alpha)*(moments[1:]-moments[1]))


def test_sigma_normalizations():
    modes = numpy.arange(1, 9)
    harmonic = numpy.cumsum(1/(2*modes-1))
    assert numpy.allclose(gsqgpatch.sigma_j(1.0, modes, "raw"), 8*harmonic)
    assert numpy.allclose(gsqgpatch.sigma_j(1.0, modes, "two_over_pi"),
                          2/numpy.pi*harmonic)
    assert numpy.allclose(gsqgpatch.sigma_j(1.0, modes),
                          2/numpy.pi*(harmonic-1))
    assert numpy.allclose(gsqgpatch.sigma_j(1.5, modes, "two_over_pi"),
                          2*numpy.pi*gsqgpatch.sigma_j(1.5, modes, "raw"))


def test_sigma_methods():
    modes = numpy.arange(1, 101)
    for alpha in (0.5, 1.25, 1.5, 1.75):
        direct = gsqgpatch.sigma_j(alpha, modes, "raw", method="gamma")
        logarithmic = gsqgpatch.sigma_j(alpha, modes, "raw", method="loggamma")
        assert numpy.allclose(direct, logarithmic, rtol=1e-10, atol=0)
    assert numpy.all(numpy.isfinite(
        gsqgpatch.sigma_j(1.5, numpy.arange(1, 2001), "raw")))


def test_sigma_growth():
    sigma = gsqgpatch.multiplier_table(1.5, 8000).sigma
    slope = numpy.log(sigma[7999]/sigma[1999])/numpy.log(4)
    assert abs(slope-0.5) < 0.05

    sigma = gsqgpatch.multiplier_table(1.0, 8000).sigma
    assert numpy.isclose(sigma[7999]-sigma[3999], numpy.log(2)/numpy.pi, rtol=1e-3)

    sigma = gsqgpatch.multiplier_table(0.5, 8000).sigma
    assert sigma[7999]-sigma[3999] < sigma[3999]-sigma[1999]


def test_multiplier_table():
    table = gsqgpatch.multiplier_table(1.25, 5)
    assert table.order == 5
    assert table[3] == table.sigma[2]
    assert numpy.all(table[[2, 3]] == table.sigma[1:3])
    with raises(ValueError):
        table.sigma[0] = 1.0
    with raises(ValueError, match="at least 1"):
        gsqgpatch.multiplier_table(1.25, 0)
