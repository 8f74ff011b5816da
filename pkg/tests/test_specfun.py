"""Gamma, Lerch transcendent, polylogarithm, and the collapsed 2F1."""

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freetransform import (
    ConvergenceError,
    DomainError,
    euler_gamma,
    gamma_fn,
    hyp2f1_special,
    integrate_finite,
    integrate_semi_infinite,
    lerch_phi,
    polylog,
)


# gamma -------------------------------------------------------------------

def test_gamma_integers_and_half_integers():
    for n in range(1, 13):
        assert math.isclose(gamma_fn(float(n)), math.factorial(n - 1),
                            rel_tol=1e-13)
    assert math.isclose(gamma_fn(0.5), math.sqrt(math.pi), rel_tol=1e-14)
    assert math.isclose(gamma_fn(1.5), math.sqrt(math.pi) / 2.0, rel_tol=1e-14)


def test_gamma_against_stdlib():
    rng = random.Random(7)
    for _ in range(50):
        x = rng.uniform(0.01, 30.0)
        assert math.isclose(gamma_fn(x), math.gamma(x), rel_tol=1e-12)


def test_gamma_reflection_region():
    # arguments below 1/2 go through the sine reflection
    for x in (0.01, 0.1, 0.3, 0.49):
        assert math.isclose(gamma_fn(x), math.gamma(x), rel_tol=1e-12)


def test_gamma_domain():
    for x in (0.0, -1.0, -2.5, math.inf, math.nan):
        with pytest.raises(DomainError):
            gamma_fn(x)


def test_euler_gamma_value():
    # gamma = -Gamma'(1) = -int_0^inf e^{-u} log u du
    res = integrate_semi_infinite(lambda u: -math.exp(-u) * math.log(u), 1e-11)
    assert abs(euler_gamma() - res.value) < 1e-9
    assert euler_gamma() == 0.5772156649015329


# lerch -------------------------------------------------------------------

def test_lerch_closed_forms():
    # Phi(z, 1, 1) = -log(1-z)/z
    assert abs(lerch_phi(0.5, 1, 1.0) - 2.0 * math.log(2.0)) < 1e-14
    # Phi(z, 1, 2) = sum z^n/(n+2) = (-log(1-z) - z)/z^2
    z = 0.3
    exact = (-math.log1p(-z) - z) / z ** 2
    assert abs(lerch_phi(z, 1, 2.0) - exact) < 1e-14
    # s = 2, v = 1 is the dilogarithm over z
    assert abs(lerch_phi(0.4, 2, 1.0) - polylog(2, 0.4) / 0.4) < 1e-14


def test_lerch_branch_agreement():
    rng = random.Random(42)
    for _ in range(25):
        r = rng.uniform(0.4, 0.6)
        theta = rng.uniform(0.05, 2.0 * math.pi - 0.05)
        z = cmath.rect(r, theta)
        for s in (1, 2, 3):
            for v in (1.0, 2.5):
                a = lerch_phi(z, s, v, method="series")
                b = lerch_phi(z, s, v, method="integral")
                assert abs(a - b) < 1e-10, (z, s, v)


@settings(max_examples=60, deadline=None)
@given(
    r=st.floats(min_value=0.0, max_value=0.85),
    theta=st.floats(min_value=0.0, max_value=2.0 * math.pi),
    s=st.sampled_from((1, 2, 3)),
    v=st.floats(min_value=0.2, max_value=5.0),
)
def test_lerch_contiguous_recurrence(r, theta, s, v):
    """Phi(z, s, v) = v^-s + z Phi(z, s, v+1)."""
    z = cmath.rect(r, theta)
    lhs = lerch_phi(z, s, v)
    rhs = v ** (-s) + z * lerch_phi(z, s, v + 1.0)
    assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(lhs))


def test_lerch_quadrature_oracle():
    # Phi(z, 1, v) = int_0^1 u^{v-1}/(1 - z u) du, checked off-definition
    for z in (0.7, -1.3, 0.2 + 0.9j):
        for v in (1.0, 2.0):
            res = integrate_finite(lambda u: u ** (v - 1.0) / (1.0 - z * u),
                                   0.0, 1.0, 1e-12)
            assert abs(lerch_phi(z, 1, v) - res.value) < 1e-10


def test_lerch_domain():
    for z in (1.0, 1.5, 100.0):
        with pytest.raises(DomainError):
            lerch_phi(z, 1, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 0, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 1, -1.0)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 1, 1.0, method="asymptotic")


def test_lerch_series_divergence():
    with pytest.raises(ConvergenceError):
        lerch_phi(-3.0, 1, 1.0, method="series")


# polylog -----------------------------------------------------------------

def test_polylog_log_identity():
    for z in (0.3, -0.8, 0.5j, -1.7 + 0.4j, 2.0j):
        assert abs(polylog(1, z) - (-cmath.log(1.0 - z))) < 1e-12, z


def test_polylog_special_values():
    assert abs(polylog(2, 1.0) - math.pi ** 2 / 6.0) < 1e-12
    assert abs(polylog(2, -1.0) - (-math.pi ** 2 / 12.0)) < 1e-12
    # Landen: Li_2(1/2) = pi^2/12 - log(2)^2/2
    assert abs(polylog(2, 0.5) - (math.pi ** 2 / 12.0 - math.log(2.0) ** 2 / 2.0)) < 1e-14
    # Apery's constant
    assert abs(polylog(3, 1.0) - 1.2020569031595943) < 1e-12


def test_polylog_integral_oracle_off_disk():
    # Li_2(z) = -int_0^1 log(1 - z u)/u du, valid along the ray to z
    for z in (3.0j, -2.5, 1.5 + 1.5j):
        res = integrate_finite(lambda u: -cmath.log(1.0 - z * u) / u,
                               0.0, 1.0, 1e-12)
        assert abs(polylog(2, z) - res.value) < 1e-10, z


def test_polylog_derivative_recurrence():
    # z d/dz Li_s(z) = Li_{s-1}(z)
    h = 1e-6
    for z in (0.4, -0.9, 0.3 + 0.2j):
        dz = (polylog(3, z + h) - polylog(3, z - h)) / (2.0 * h)
        assert abs(z * dz - polylog(2, z)) < 1e-8


def test_polylog_domain():
    with pytest.raises(DomainError):
        polylog(1, 1.0)
    with pytest.raises(DomainError):
        polylog(2, 2.0)
    with pytest.raises(DomainError):
        polylog(0, 0.5)


# collapsed hypergeometric --------------------------------------------------

def test_hyp2f1_quadrature_oracle():
    # 2F1(1, k+1; k+2; -z) = (k+1) int_0^1 s^k/(1+z s) ds
    for k in (1, 2, 4):
        for z in (0.4, -0.6, 2.0, 1.0j):
            res = integrate_finite(lambda s: (k + 1) * s ** k / (1.0 + z * s),
                                   0.0, 1.0, 1e-12)
            assert abs(hyp2f1_special(k, z) - res.value) < 1e-10, (k, z)


def test_hyp2f1_branch_consistency():
    for k in (1, 3):
        for z in (0.49, 0.51, 0.49j, 0.51j, -0.49, -0.51):
            a = hyp2f1_special(k, complex(z))
            res = integrate_finite(lambda s: (k + 1) * s ** k / (1.0 + z * s),
                                   0.0, 1.0, 1e-12)
            assert abs(a - res.value) < 1e-10


def test_hyp2f1_frozen_value():
    assert abs(hyp2f1_special(2, 0.4) - 0.7721360916193565) < 1e-13


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        hyp2f1_special(1, -1.0)
    with pytest.raises(DomainError):
        hyp2f1_special(1, -3.5)
    with pytest.raises(DomainError):
        hyp2f1_special(0, 0.5)
