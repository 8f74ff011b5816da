"""Scalar special functions: Hurwitz-Lerch transcendent, polylogarithm,
a Gauss hypergeometric special case, and the gamma function.

Only the slices actually needed by the transform kernels are covered:
integer s >= 1 for the Lerch/polylog family, one fixed hypergeometric
parameter pattern, gamma on the positive axis.  Each function has a
power-series branch near the origin and an integral or identity branch
elsewhere; the switch radius is 1/2.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError
from .quadrature import integrate_semi_infinite

_SERIES_RADIUS = 0.5
_SERIES_MAX_TERMS = 1_000_000
_SERIES_EPS = 1e-15
_INTEGRAL_TOL = 1e-11

# Euler-Mascheroni constant, double precision.
_EULER_GAMMA = 0.5772156649015329

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def euler_gamma() -> float:
    """The Euler-Mascheroni constant."""
    return _EULER_GAMMA


def gamma_fn(x: float) -> float:
    """Gamma function on the positive real axis via the Lanczos sum."""
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"gamma_fn requires x > 0, got {x!r}")
    if x < 0.5:
        # reflection keeps the Lanczos argument above 1/2
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real >= 1.0


def _lerch_series(z: complex, s: int, v: float) -> complex:
    """Direct summation of sum_{n>=0} z^n / (v+n)^s."""
    acc = complex(0.0)
    acc_mod = 0.0
    term = complex(1.0)  # z^n, starting at n = 0
    for n in range(_SERIES_MAX_TERMS):
        contrib = term / (v + n) ** s
        acc += contrib
        acc_mod += abs(contrib)
        if abs(contrib) < _SERIES_EPS * (1.0 + acc_mod):
            return acc
        term *= z
    raise ConvergenceError(
        f"Lerch series did not converge within {_SERIES_MAX_TERMS} terms at z={z!r}"
    )


def _lerch_integral(z: complex, s: int, v: float, tol: float = _INTEGRAL_TOL) -> complex:
    """Integral form (1/Gamma(s)) int_0^inf t^(s-1) e^(-v t)/(1 - z e^(-t)) dt.

    Valid for z off the real ray [1, inf); the integrand's denominator
    never vanishes there.
    """

    def integrand(t: float) -> complex:
        w = math.exp(-t)
        return t ** (s - 1) * math.exp(-v * t) / (1.0 - z * w)

    res = integrate_semi_infinite(integrand, tol)
    return res.value / gamma_fn(float(s))


def lerch_phi(z: complex, s: int, v: float, *, method: str = "auto") -> complex:
    """Hurwitz-Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n/(v+n)^s.

    Parameters
    ----------
    z : complex, not on the real ray [1, inf)
    s : int >= 1
    v : float > 0
    method : "auto" picks series for |z| <= 1/2 and the integral
        representation otherwise; "series"/"integral" force a branch.

    The two branches agree to ~1e-10 in the overlap band and that
    agreement is part of the package's verification battery.
    """
    z = complex(z)
    if _on_cut(z):
        raise DomainError(f"z = {z!r} lies on the singular ray [1, inf)")
    if not (isinstance(s, int) and s >= 1):
        raise DomainError(f"s must be an integer >= 1, got {s!r}")
    if not (v > 0.0 and math.isfinite(v)):
        raise DomainError(f"v must be positive and finite, got {v!r}")

    if method == "series":
        return _lerch_series(z, s, v)
    if method == "integral":
        return _lerch_integral(z, s, v)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")
    if abs(z) <= _SERIES_RADIUS:
        return _lerch_series(z, s, v)
    return _lerch_integral(z, s, v)


def _zeta_int(s: int) -> float:
    """zeta(s) for integer s >= 2 by Euler-Maclaurin corrected partial sums."""
    n_cut = 10_000
    acc = 0.0
    # summing smallest terms first keeps the rounding error down
    for n in range(n_cut, 0, -1):
        acc += 1.0 / float(n) ** s
    tail = (
        n_cut ** (1 - s) / (s - 1)
        - 0.5 * n_cut ** (-s)
        + (s / 12.0) * n_cut ** (-s - 1)
    )
    return acc + tail


def polylog(s: int, z: complex) -> complex:
    """Polylogarithm Li_s(z) = sum_{n>=1} z^n / n^s for integer s >= 1.

    Uses the direct series for |z| <= 1/2 and Li_s(z) = z*Phi(z, s, 1)
    otherwise.  z = 1 diverges for s = 1 and is summed separately for
    s >= 2 (the Lerch integral form has its cut starting at z = 1, but
    the series there is just zeta(s)).
    """
    z = complex(z)
    if not (isinstance(s, int) and s >= 1):
        raise DomainError(f"s must be an integer >= 1, got {s!r}")
    if z == 1.0:
        if s == 1:
            raise DomainError("Li_1(1) diverges")
        return complex(_zeta_int(s))
    if _on_cut(z):
        raise DomainError(f"z = {z!r} lies on the singular ray [1, inf)")
    if abs(z) <= _SERIES_RADIUS:
        acc = complex(0.0)
        acc_mod = 0.0
        term = complex(1.0)
        for n in range(1, _SERIES_MAX_TERMS + 1):
            term *= z
            contrib = term / float(n) ** s
            acc += contrib
            acc_mod += abs(contrib)
            if abs(contrib) < _SERIES_EPS * (1.0 + acc_mod):
                return acc
        raise ConvergenceError(f"polylog series stalled at z={z!r}")
    return z * lerch_phi(z, s, 1.0)


def hyp2f1_special(k: int, z: complex) -> complex:
    """2F1(1, k+1; k+2; -z) for integer k >= 1, z off (-inf, -1].

    Every Pochhammer ratio collapses, leaving
    (k+1) * sum_{n>=0} (-z)^n / (k+n+1), used for |z| <= 1/2.  Beyond
    that the value is recovered from the Lerch transcendent:
    (k+1) * (-z)^(-1) * (Phi(-z, 1, k) - 1/k).
    """
    z = complex(z)
    if not (isinstance(k, int) and k >= 1):
        raise DomainError(f"k must be an integer >= 1, got {k!r}")
    if z.imag == 0.0 and z.real <= -1.0:
        raise DomainError(f"z = {z!r} lies on the singular ray (-inf, -1]")

    if abs(z) <= _SERIES_RADIUS:
        acc = complex(0.0)
        acc_mod = 0.0
        term = complex(1.0)  # (-z)^n
        for n in range(_SERIES_MAX_TERMS):
            contrib = term / (k + n + 1)
            acc += contrib
            acc_mod += abs(contrib)
            if abs(contrib) < _SERIES_EPS * (1.0 + acc_mod):
                return (k + 1) * acc
            term *= -z
        raise ConvergenceError(f"hypergeometric series stalled at z={z!r}")
    return (k + 1) * (lerch_phi(-z, 1, float(k)) - 1.0 / k) / (-z)
