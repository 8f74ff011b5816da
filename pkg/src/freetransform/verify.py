"""Named verification batteries behind the command-line ``verify`` command.

Each suite returns a list of CheckResult records; a check passes when its
deviation does not exceed its tolerance.  Sign and band checks are folded
into the same shape by reporting the amount by which the constraint is
violated (0.0 when satisfied) against a tolerance of 0.0.

All sampling is seeded, so repeated runs produce identical tables.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .kernels import (
    const_c,
    const_c_quad,
    const_d,
    const_d_quad,
    custom_step,
    kernel_g,
    kernel_g_quad,
    lclass,
    pick_eval,
    pick_representation,
    sself,
    ubeta,
)
from .measures import LevyTriple
from .operators import (
    filtration_limit_check,
    lower_selfdec_class,
    lower_shrink_class,
    operator_power,
)
from .specfun import euler_gamma
from .transforms import (
    cauchy_pick_integral,
    linf_integrand,
    transform_lclass,
    transform_sself,
    voiculescu_id,
    voiculescu_via_laplace,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} {self.deviation!r} {self.tol!r}"


# shared sample grids -----------------------------------------------------

_KS = (1, 2, 3, 4, 5)
_T_GRID = (0.5, 1.0, 2.0)


def _upper_grid(n: int = 5):
    """n x n grid of z over [-0.5, 2] x [0.1, 2]i."""
    res = [-0.5 + 2.5 * i / (n - 1) for i in range(n)]
    ims = [0.1 + 1.9 * i / (n - 1) for i in range(n)]
    return [complex(re, im) for re in res for im in ims]


def _families(ks=_KS):
    for k in ks:
        yield f"sself-{k}", sself(k)
        yield f"ubeta-{k}", ubeta(k)
        yield f"lclass-{k}", lclass(k)


# suites ------------------------------------------------------------------

def suite_kernels() -> list[CheckResult]:
    """Closed-form kernel data against direct quadrature."""
    grid = _upper_grid()
    worst_g = {"sself": 0.0, "ubeta": 0.0, "lclass": 0.0}
    worst_cd = {"sself": 0.0, "ubeta": 0.0, "lclass": 0.0}
    for _, fam in _families():
        for z in grid:
            dev = abs(kernel_g(fam, z) - kernel_g_quad(fam, z).value)
            worst_g[fam.tag] = max(worst_g[fam.tag], dev)
        dev_c = abs(const_c(fam) - const_c_quad(fam).value)
        dev_d = abs(const_d(fam) - const_d_quad(fam).value)
        worst_cd[fam.tag] = max(worst_cd[fam.tag], dev_c, dev_d)

    results = []
    for tag in ("sself", "ubeta", "lclass"):
        results.append(CheckResult(f"{tag}-g-oracle", worst_g[tag], 1e-8))
        results.append(CheckResult(f"{tag}-const-oracle", worst_cd[tag], 1e-10))

    # the log-weight kernel integrates on two different charts
    dev = 0.0
    for k in (1, 2, 3):
        fam = sself(k)
        for z in grid[::5]:
            a = kernel_g_quad(fam, z, via="interval").value
            b = kernel_g_quad(fam, z, via="halfline").value
            dev = max(dev, abs(a - b))
    results.append(CheckResult("sself-chart-agreement", dev, 1e-10))
    return results


def suite_nevanlinna() -> list[CheckResult]:
    """Im g(z) < 0 on the open upper half-plane, every family."""
    rng = random.Random(20260817)
    samples = [complex(rng.uniform(-3.0, 3.0), rng.uniform(1e-3, 3.0))
               for _ in range(200)]
    results = []
    for label, fam in (("sself", sself(2)), ("ubeta", ubeta(2)),
                       ("lclass", lclass(1))):
        worst = max(kernel_g(fam, z).imag for z in samples)
        # violation amount: 0 when the sign is strictly negative
        results.append(CheckResult(f"{label}-upper-to-lower", max(0.0, worst), 0.0))

    step = custom_step(lambda s: 1.0 / (1.0 + s), ((0.5, 0.7), (1.5, 0.3)))
    worst = max(kernel_g_quad(step, z).value.imag for z in samples[::4])
    results.append(CheckResult("custom-step-upper-to-lower", max(0.0, worst), 0.0))
    return results


_OP_TRIPLES = (
    LevyTriple(0.4, 1.1, ((-1.5, 0.4), (0.7, 1.2), (2.0, 0.3))),
    LevyTriple(-0.8, 0.0, ((1.0, 2.0),)),
    LevyTriple(0.0, 2.5, ()),
)


def suite_operators() -> list[CheckResult]:
    """Differential lowering along both class hierarchies."""
    results = []

    dev_shrink = 0.0
    dev_selfdec = 0.0
    for tr in _OP_TRIPLES:
        for k in (1, 2, 3):
            upper = lower_shrink_class(lambda t, k=k, tr=tr: transform_sself(k, tr, t).value)
            lower = lower_selfdec_class(lambda t, k=k, tr=tr: transform_lclass(k, tr, t).value)
            for t in _T_GRID:
                dev_shrink = max(dev_shrink,
                                 abs(upper(t) - transform_sself(k - 1, tr, t).value))
                dev_selfdec = max(dev_selfdec,
                                  abs(lower(t) - transform_lclass(k - 1, tr, t).value))
    results.append(CheckResult("shrink-step", dev_shrink, 1e-6))
    results.append(CheckResult("selfdec-step", dev_selfdec, 1e-6))

    tr = _OP_TRIPLES[0]
    for k in (1, 2, 3):
        powered = operator_power(lower_shrink_class,
                                 lambda t, k=k: transform_sself(k, tr, t).value, k)
        dev = max(abs(powered(t) - voiculescu_id(tr, t).value) for t in _T_GRID)
        results.append(CheckResult(f"shrink-power-{k}", dev, k / 1e5))
    for k in (0, 1, 2):
        powered = operator_power(lower_selfdec_class,
                                 lambda t, k=k: transform_lclass(k, tr, t).value,
                                 k + 1)
        dev = max(abs(powered(t) - voiculescu_id(tr, t).value) for t in _T_GRID)
        results.append(CheckResult(f"selfdec-power-{k + 1}", dev, (k + 1) / 1e5))

    # (2 - t d/dt) - (1 - t d/dt) is the identity, whatever the step noise
    dev = 0.0
    for tr in _OP_TRIPLES:
        V = lambda t, tr=tr: voiculescu_id(tr, t).value
        big, small = lower_shrink_class(V), lower_selfdec_class(V)
        dev = max(dev, max(abs(big(t) - small(t) - V(t)) for t in _T_GRID))
    results.append(CheckResult("operator-difference-identity", dev, 1e-12))
    return results


def suite_limits() -> list[CheckResult]:
    """Large-k filtration limit, small-x slopes, removable singularities."""
    results = []

    mono_bad = 0.0
    rate_bad = 0.0
    for tr in (_OP_TRIPLES[0], _OP_TRIPLES[2]):
        for t in _T_GRID:
            rep = filtration_limit_check(tr, t)
            for i in range(len(rep.deviations) - 1):
                mono_bad = max(mono_bad, rep.deviations[i + 1] - rep.deviations[i])
            for r in rep.ratios:
                rate_bad = max(rate_bad, 5.0 - r, r - 20.0)
    results.append(CheckResult("ubeta-filtration-monotone", max(0.0, mono_bad), 0.0))
    results.append(CheckResult("ubeta-filtration-rate", max(0.0, rate_bad), 0.0))

    # (g(ix/t) - c)/x -> d/(it), Richardson-extrapolated from x = 1e-5, 1e-6
    for tag, make in (("sself", sself), ("ubeta", ubeta), ("lclass", lclass)):
        dev = 0.0
        for k in (1, 2, 3):
            fam = make(k)
            c, d = const_c(fam), const_d(fam)
            for t in (0.5, 2.0):
                slope = lambda x: (kernel_g(fam, 1j * x / t) - c) / x
                extrap = (10.0 * slope(1e-6) - slope(1e-5)) / 9.0
                dev = max(dev, abs(extrap - d / (1j * t)))
        results.append(CheckResult(f"{tag}-small-x-slope", dev, 1e-5))

    lim_pos = complex(-euler_gamma(), math.pi / 2.0)
    lim_neg = complex(euler_gamma(), math.pi / 2.0)
    for name, x0, lim in (("linf-approach-pos", 1.0, lim_pos),
                          ("linf-approach-neg", -1.0, lim_neg)):
        t = 1.0  # t^{1-|x|} = 1 there, so the limit is bare
        dev = abs(linf_integrand(x0 * (1.0 - 1e-6), t) - lim)
        dev = max(dev, abs(linf_integrand(x0 * (1.0 + 1e-6), t) - lim))
        results.append(CheckResult(name, dev, 1e-5))
    return results


_GAUSS_PAIRS = ((0.0, 1.0), (1.0, 2.0), (-0.7, 0.3), (2.5, 4.0), (-2.0, 1.7))
_LAPLACE_T = (0.5, 0.8, 1.0, 1.6, 2.0)


def suite_laplace() -> list[CheckResult]:
    """Log-characteristic-function route against closed forms."""
    results = []

    dev = 0.0
    for a, var in _GAUSS_PAIRS:
        tr = LevyTriple(a, var, ())
        for t in _LAPLACE_T:
            closed = a + var / (1j * t)
            dev = max(dev, abs(voiculescu_via_laplace(tr, t).value - closed))
    results.append(CheckResult("gaussian-laplace-roundtrip", dev, 1e-6))

    tr = LevyTriple(0.3, 0.0, ((1.0, 1.0), (-2.0, 0.5)))
    dev = max(abs(voiculescu_via_laplace(tr, t).value - voiculescu_id(tr, t).value)
              for t in _T_GRID)
    results.append(CheckResult("atomic-laplace-roundtrip", dev, 1e-6))

    dev = max(abs(cauchy_pick_integral(t) - complex(0.0, -math.pi))
              for t in _T_GRID)
    results.append(CheckResult("cauchy-integral-anchor", dev, 1e-6))
    return results


def suite_pick() -> list[CheckResult]:
    """Finite step kernels: integral form vs half-plane representation."""
    rng = random.Random(1094)
    zs = [complex(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0)) for _ in range(5)]
    dev = 0.0
    for _ in range(20):
        n = rng.randint(5, 20)
        hs = [rng.uniform(0.05, 3.0) for _ in range(n)]
        ws = [rng.uniform(0.01, 1.0) for _ in range(n)]
        rep = pick_representation(hs, ws)
        for z in zs:
            direct = sum(w * h / (z * h + 1.0) for h, w in zip(hs, ws))
            dev = max(dev, abs(pick_eval(rep, z) - direct))
    return [CheckResult("pick-identity", dev, 1e-12)]


SUITES = {
    "kernels": suite_kernels,
    "nevanlinna": suite_nevanlinna,
    "operators": suite_operators,
    "limits": suite_limits,
    "laplace": suite_laplace,
    "pick": suite_pick,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn())
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
