"""Adaptive Gauss-Kronrod integration against integrals with known values."""

import math

import pytest

from freetransform import (
    InvalidInput,
    MaxSubdivisionError,
    NonFiniteError,
    integrate_finite,
    integrate_semi_infinite,
    laplace_transform,
)

TOL = 1e-10


def check(res, exact, tol=TOL):
    err = abs(res.value - exact)
    assert err <= max(tol, res.error_estimate), (res, exact)
    # the estimate must bound the true error (with a little headroom
    # for the pairwise-summation rounding of many panels)
    assert err <= res.error_estimate + 1e-14 or err <= 1e-14


def test_smooth_polynomial():
    res = integrate_finite(lambda s: s ** 3, 0.0, 1.0)
    check(res, 0.25)
    assert res.evaluations >= 15


def test_log_endpoint_singularity():
    check(integrate_finite(math.log, 0.0, 1.0), -1.0)


def test_inverse_sqrt_singularity():
    check(integrate_finite(lambda s: 1.0 / math.sqrt(s), 0.0, 1.0), 2.0)


def test_complex_oscillatory():
    res = integrate_finite(lambda s: complex(math.cos(s), math.sin(s)), 0.0, 1.0)
    check(res, complex(math.sin(1.0), 1.0 - math.cos(1.0)))


def test_moderately_oscillatory():
    check(integrate_finite(lambda s: math.cos(40.0 * s), 0.0, 1.0),
          math.sin(40.0) / 40.0)


def test_endpoints_never_sampled():
    def f(s):
        assert 0.0 < s < 1.0
        return math.log(s) / math.sqrt(1.0 - s)

    # value = 2 (log(4) - 2) / ... no closed form needed; just finish
    res = integrate_finite(f, 0.0, 1.0)
    assert res.error_estimate < 1e-8


def test_linearity():
    f = lambda s: math.exp(s)
    g = lambda s: 1.0 / (1.0 + s)
    combined = integrate_finite(lambda s: 2.0 * f(s) - 3.0 * g(s), 0.0, 1.0)
    parts = (2.0 * integrate_finite(f, 0.0, 1.0).value
             - 3.0 * integrate_finite(g, 0.0, 1.0).value)
    assert abs(combined.value - parts) < 1e-12


def test_determinism():
    f = lambda s: math.sin(17.0 * s) / math.sqrt(s)
    a = integrate_finite(f, 0.0, 1.0)
    b = integrate_finite(f, 0.0, 1.0)
    assert a.value == b.value and a.error_estimate == b.error_estimate


def test_semi_infinite_exponential():
    check(integrate_semi_infinite(lambda s: math.exp(-s)), 1.0)
    check(integrate_semi_infinite(lambda s: s * math.exp(-s)), 1.0)
    check(integrate_semi_infinite(lambda s: math.exp(-s * s)),
          math.sqrt(math.pi) / 2.0)


def test_semi_infinite_algebraic_tail():
    # 1/(1+s^2) has only algebraic decay; the log chart cannot reach it
    res = integrate_semi_infinite(lambda s: 1.0 / (1.0 + s * s),
                                  1e-9, tail="alg")
    check(res, math.pi / 2.0, tol=1e-9)


def test_laplace_of_constant_and_ramp():
    for t in (0.5, 1.0, 2.0):
        check(laplace_transform(lambda u: 1.0, t), 1.0 / t)
        check(laplace_transform(lambda u: u, t), 1.0 / t ** 2)


def test_laplace_singular_integrand():
    # L{u^(-1/2)}(t) = sqrt(pi/t); exercises the endpoint singularity
    # after the exponential substitution
    for t in (0.5, 2.0):
        res = laplace_transform(lambda u: 1.0 / math.sqrt(u), t, 1e-9)
        check(res, math.sqrt(math.pi / t), tol=1e-9)


def test_invalid_bounds_and_tol():
    with pytest.raises(InvalidInput):
        integrate_finite(lambda s: s, 1.0, 0.0)
    with pytest.raises(InvalidInput):
        integrate_finite(lambda s: s, 0.0, math.inf)
    with pytest.raises(InvalidInput):
        integrate_finite(lambda s: s, 0.0, 1.0, tol=0.0)
    with pytest.raises(InvalidInput):
        integrate_semi_infinite(lambda s: s, tail="cubic")
    with pytest.raises(InvalidInput):
        laplace_transform(lambda u: 1.0, 0.0)


def test_non_finite_integrand():
    with pytest.raises(NonFiniteError):
        integrate_finite(lambda s: float("inf"), 0.0, 1.0)
    with pytest.raises(NonFiniteError):
        integrate_finite(lambda s: complex(0.0, float("nan")), 0.0, 1.0)


def test_panel_budget_exhaustion():
    # ~1e8 oscillations can't be resolved by 1e4 panels
    with pytest.raises(MaxSubdivisionError):
        integrate_finite(lambda s: math.sin(1e8 * s), 0.0, 1.0, tol=1e-12)
