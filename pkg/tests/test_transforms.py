"""Transform evaluation on the imaginary axis, all class families."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freetransform import (
    DomainError,
    FiniteMeasure,
    InvalidInput,
    LevyTriple,
    LInfSpec,
    add_transforms,
    cauchy_pick_integral,
    custom_step,
    euler_gamma,
    exp_map_convolution_check,
    linf_integrand,
    logphi,
    random_integral_transform,
    reflect_triple,
    scale_transform,
    scale_triple,
    sself,
    transform_lclass,
    transform_lclass_measure,
    transform_linf,
    transform_sself,
    transform_sself_measure,
    transform_ubeta,
    transform_ubeta_measure,
    ubeta,
    voiculescu_cauchy,
    voiculescu_direct,
    voiculescu_id,
    voiculescu_via_laplace,
)

GAUSS = LevyTriple(1.0, 2.0, ())
MIXED = LevyTriple(0.4, 1.1, ((-1.5, 0.4), (0.7, 1.2), (2.0, 0.3)))
T_GRID = (0.5, 1.0, 2.0)


# characteristic exponent -----------------------------------------------------

def test_logphi_gaussian():
    # i a t - sigma^2 t^2 / 2 at t = 0.7
    assert abs(logphi(GAUSS, 0.7) - complex(-0.7 * 0.7, 0.7)) < 1e-15


def test_logphi_compound_poisson():
    tr = LevyTriple(0.0, 0.0, ((1.0, 2.0),))
    t = 0.3
    exact = 2.0 * (cmath.exp(1j * t) - 1.0 - 1j * t / 2.0)
    assert abs(logphi(tr, t) - exact) < 1e-15


# direct evaluation ------------------------------------------------------------

def test_direct_single_atom():
    val = voiculescu_direct(0.0, FiniteMeasure(((1.0, 1.0),)), 1.0)
    assert abs(val.value - (-1.0j)) < 1e-15  # (1+i)/(i-1) = -i
    assert val.t == 1.0


def test_direct_origin_atom_is_gaussian_term():
    val = voiculescu_direct(0.0, FiniteMeasure(((0.0, 2.0),)), 1.0)
    assert abs(val.value - 2.0 / 1.0j) < 1e-15


def test_id_gaussian_closed_form():
    for t in T_GRID:
        assert abs(voiculescu_id(GAUSS, t).value - (1.0 + 2.0 / (1j * t))) < 1e-15


def test_id_rejects_bad_t():
    for t in (0.0, -1.0, math.inf):
        with pytest.raises(DomainError):
            voiculescu_id(GAUSS, t)


# analytic route ----------------------------------------------------------------

def test_laplace_route_matches_direct():
    for tr in (GAUSS, MIXED):
        for t in T_GRID:
            a = voiculescu_via_laplace(tr, t).value
            b = voiculescu_id(tr, t).value
            assert abs(a - b) < 1e-7, (tr, t)


# named classes vs the generic kernel map -----------------------------------------

def test_named_transforms_equal_generic():
    for t in T_GRID:
        for k in (1, 2):
            a = random_integral_transform(sself(k), MIXED, t).value
            assert abs(a - transform_sself(k, MIXED, t).value) < 1e-12
            b = random_integral_transform(ubeta(k), MIXED, t).value
            assert abs(b - transform_ubeta(k, MIXED, t).value) < 1e-12


def test_shrink_order_zero_is_id():
    for t in T_GRID:
        assert abs(transform_sself(0, MIXED, t).value
                   - voiculescu_id(MIXED, t).value) < 1e-14


def test_ubeta_large_k_approaches_id():
    t = 1.0
    target = voiculescu_id(GAUSS, t).value
    # closed-form gap: |-a/(k+1) + 2 sigma^2/((k+2) i t)|
    for k in (10, 100):
        gap = abs(transform_ubeta(k, GAUSS, t).value - target)
        exact = abs(complex(-1.0 / (k + 1), -2.0 * 2.0 / (k + 2)))
        assert math.isclose(gap, exact, rel_tol=1e-9)


def test_lclass_poisson_value():
    # single unit jump at x = 1, k = 0: V = it Li_1(1/(it)) - 1/2
    tr = LevyTriple(0.0, 0.0, ((1.0, 1.0),))
    t = 2.0
    it = 2.0j
    exact = it * (-cmath.log(1.0 - 1.0 / it)) - 0.5
    assert abs(transform_lclass(0, tr, t).value - exact) < 1e-14


def test_lclass_requires_valid_k():
    with pytest.raises(InvalidInput):
        transform_lclass(-1, GAUSS, 1.0)
    with pytest.raises(InvalidInput):
        transform_ubeta(0, GAUSS, 1.0)
    with pytest.raises(InvalidInput):
        transform_sself(-2, GAUSS, 1.0)


# measure-variant entry points ------------------------------------------------------

def test_sself_measure_form():
    from freetransform import triple_to_finite_measure

    m = triple_to_finite_measure(MIXED)
    for t in T_GRID:
        a = transform_sself_measure(2, MIXED.drift, m, t).value
        assert abs(a - transform_sself(2, MIXED, t).value) < 1e-14


def test_ubeta_measure_form():
    from freetransform import triple_to_finite_measure

    m = triple_to_finite_measure(MIXED)
    a = transform_ubeta_measure(3, MIXED.drift, m, 1.3).value
    assert abs(a - transform_ubeta(3, MIXED, 1.3).value) < 1e-14


def test_lclass_measure_form_weighting():
    k = 1
    atoms = [(0.0, MIXED.gauss_var)]
    for x, w in MIXED.levy_atoms:
        weight = math.log(1.0 + abs(x) ** (2.0 / (k + 1))) ** (k + 1)
        atoms.append((x, w * weight))
    m = FiniteMeasure(tuple(atoms))
    for t in T_GRID:
        a = transform_lclass_measure(k, MIXED.drift, m, t).value
        assert abs(a - transform_lclass(k, MIXED, t).value) < 1e-13


# dilation and convolution algebra ----------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.2, max_value=5.0),
       st.floats(min_value=0.3, max_value=3.0))
def test_scaling_identity(c, t):
    """c V(it/c) must equal the transform of the dilated triple."""
    scaled = scale_triple(c, MIXED)
    lhs = scale_transform(c, lambda u: voiculescu_id(MIXED, u).value, t).value
    rhs = voiculescu_id(scaled, t).value
    assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))


def test_additivity_under_convolution():
    tr1 = LevyTriple(0.5, 1.0, ((1.0, 0.7),))
    tr2 = LevyTriple(-0.2, 0.5, ((-2.0, 0.4),))
    convolved = LevyTriple(0.3, 1.5, ((-2.0, 0.4), (1.0, 0.7)))
    for t in T_GRID:
        total = add_transforms(lambda u: voiculescu_id(tr1, u).value,
                               lambda u: voiculescu_id(tr2, u).value, t).value
        assert abs(total - voiculescu_id(convolved, t).value) < 1e-12


def test_exp_map_convolution_split():
    rep = exp_map_convolution_check(MIXED, T_GRID)
    assert rep.max_deviation <= 1e-12
    assert rep.t_grid == T_GRID
    assert len(rep.totals) == 3
    assert rep.jump_log_moment > 0.0


def test_exp_map_convolution_empty_grid():
    with pytest.raises(InvalidInput):
        exp_map_convolution_check(MIXED, ())


# decreasing time changes ------------------------------------------------------------

def test_decreasing_kernel_against_reflection_oracle():
    """For a non-increasing step time change, the transform must equal
    sum over steps of (-jump) h V[reflected law](t/h)."""
    h = lambda s: 1.0 / s
    jumps = ((1.0, -0.6), (2.0, -0.4))
    fam = custom_step(h, jumps, increasing=False)
    refl = reflect_triple(MIXED)
    for t in T_GRID:
        direct = random_integral_transform(fam, MIXED, t).value
        oracle = sum((-j) * h(s) * voiculescu_id(refl, t / h(s)).value
                     for s, j in jumps)
        assert abs(direct - oracle) < 1e-12, t


def test_increasing_step_kernel_average_identity():
    # V[image](it) = sum jump * h * V(it/h) for a non-decreasing step change
    h = lambda s: s
    jumps = ((0.25, 0.5), (0.75, 0.5))
    fam = custom_step(h, jumps)
    for t in T_GRID:
        direct = random_integral_transform(fam, MIXED, t).value
        oracle = sum(j * h(s) * voiculescu_id(MIXED, t / h(s)).value
                     for s, j in jumps)
        assert abs(direct - oracle) < 1e-12


# scale-invariant class ----------------------------------------------------------------

def test_linf_integrand_limits_filled():
    assert linf_integrand(1.0, 3.7) == complex(-euler_gamma(), math.pi / 2.0)
    assert linf_integrand(-1.0, 0.2) == complex(euler_gamma(), math.pi / 2.0)


def test_linf_rademacher():
    spec = LInfSpec(0.4, FiniteMeasure(((1.0, 0.5), (-1.0, 0.5))))
    for t in T_GRID:
        val = transform_linf(spec, t).value
        assert abs(val - complex(0.4, -math.pi / 2.0)) < 1e-15


def test_linf_scale_closure():
    spec = LInfSpec(0.3, FiniteMeasure(((0.5, 1.0), (-1.2, 0.7), (2.0, 0.2))))
    for c in (0.5, 2.0, 7.0):
        rescaled = LInfSpec(
            c * spec.shift,
            FiniteMeasure(tuple((x, w * c ** abs(x))
                                for x, w in spec.measure.atoms)))
        for t in (0.7, 1.9):
            lhs = scale_transform(c, lambda u: transform_linf(spec, u).value, t).value
            rhs = transform_linf(rescaled, t).value
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))


def test_linf_spec_validation():
    with pytest.raises(InvalidInput):
        LInfSpec(0.0, FiniteMeasure(((2.5, 1.0),)))
    with pytest.raises(InvalidInput):
        LInfSpec(0.0, FiniteMeasure(((-2.0, 1.0),)))
    with pytest.raises(InvalidInput):
        LInfSpec(0.0, FiniteMeasure(((1.0, 0.0),)))
    LInfSpec(0.0, FiniteMeasure(((2.0, 1.0),)))  # right endpoint included


def test_linf_integrand_domain():
    with pytest.raises(DomainError):
        linf_integrand(0.0, 1.0)
    with pytest.raises(DomainError):
        linf_integrand(2.1, 1.0)
    with pytest.raises(DomainError):
        linf_integrand(1.0, 0.0)


# Cauchy anchor -----------------------------------------------------------------------

def test_cauchy_integral_value():
    for t in T_GRID:
        assert abs(cauchy_pick_integral(t) - complex(0.0, -math.pi)) < 1e-6


def test_cauchy_transform_is_shift_minus_half_pi():
    for t in (0.5, 1.0):
        val = voiculescu_cauchy(0.3, t).value
        assert abs(val - complex(0.3, -math.pi / 2.0)) < 1e-6
