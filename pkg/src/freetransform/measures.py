"""Levy-Khintchine triples and the finite spectral measures they map to.

A triple [a, sigma^2, M] describes an infinitely divisible law through
its characteristic exponent

    log phi(t) = i t a - sigma^2 t^2 / 2
                 + sum_x w_x (e^{itx} - 1 - itx/(1+x^2)).

Only purely atomic jump measures M are supported.  The companion
representation is a finite measure m with m({x}) = x^2/(1+x^2) * M({x})
for x != 0 and m({0}) = sigma^2; that m is what the transform formulas
integrate against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidInput

Atom = tuple[float, float]  # (location, weight)


def _check_atoms(atoms, *, allow_zero_loc: bool, nonneg_ok: bool, what: str):
    seen = set()
    for x, w in atoms:
        if not (math.isfinite(x) and math.isfinite(w)):
            raise InvalidInput(f"{what}: non-finite atom ({x!r}, {w!r})")
        if not allow_zero_loc and x == 0.0:
            raise InvalidInput(f"{what}: atom at 0 not allowed")
        if nonneg_ok:
            if w < 0.0:
                raise InvalidInput(f"{what}: negative mass {w!r} at {x!r}")
        elif w <= 0.0:
            raise InvalidInput(f"{what}: mass must be positive, got {w!r} at {x!r}")
        if x in seen:
            raise InvalidInput(f"{what}: duplicate atom location {x!r}")
        seen.add(x)


def _sorted_atoms(atoms) -> tuple[Atom, ...]:
    return tuple(sorted(((float(x), float(w)) for x, w in atoms), key=lambda a: a[0]))


@dataclass(frozen=True)
class LevyTriple:
    """Generating triple [drift, gauss_var, levy_atoms] of an ID law.

    levy_atoms is the jump measure: atoms at nonzero locations with
    strictly positive weights, locations pairwise distinct.
    """

    drift: float
    gauss_var: float
    levy_atoms: tuple[Atom, ...] = field(default=())

    def __post_init__(self):
        if not math.isfinite(self.drift):
            raise InvalidInput(f"drift must be finite, got {self.drift!r}")
        if not (math.isfinite(self.gauss_var) and self.gauss_var >= 0.0):
            raise InvalidInput(f"gauss_var must be >= 0, got {self.gauss_var!r}")
        _check_atoms(self.levy_atoms, allow_zero_loc=False, nonneg_ok=False,
                     what="levy_atoms")
        object.__setattr__(self, "levy_atoms", _sorted_atoms(self.levy_atoms))


@dataclass(frozen=True)
class FiniteMeasure:
    """Purely atomic finite measure on the real line.

    Atom locations are pairwise distinct (constructors reject duplicates
    rather than merging) and masses are >= 0; an atom at 0 is allowed.
    """

    atoms: tuple[Atom, ...] = field(default=())

    def __post_init__(self):
        _check_atoms(self.atoms, allow_zero_loc=True, nonneg_ok=True,
                     what="atoms")
        object.__setattr__(self, "atoms", _sorted_atoms(self.atoms))

    def mass_at(self, x: float) -> float:
        for loc, w in self.atoms:
            if loc == x:
                return w
        return 0.0

    @property
    def total_mass(self) -> float:
        return sum(w for _, w in self.atoms)


def triple_to_finite_measure(tr: LevyTriple) -> FiniteMeasure:
    """Companion measure of a triple: jump atoms reweighted by
    x^2/(1+x^2), plus an atom of mass gauss_var at the origin."""
    atoms = [(x, w * (x * x / (1.0 + x * x))) for x, w in tr.levy_atoms]
    if tr.gauss_var > 0.0:
        atoms.append((0.0, tr.gauss_var))
    return FiniteMeasure(atoms=tuple(atoms))


def finite_measure_to_triple(a: float, m: FiniteMeasure) -> LevyTriple:
    """Inverse of triple_to_finite_measure; the drift passes through."""
    gauss_var = 0.0
    jump = []
    for x, w in m.atoms:
        if x == 0.0:
            gauss_var = w
        elif w > 0.0:
            jump.append((x, w * ((1.0 + x * x) / (x * x))))
    return LevyTriple(drift=a, gauss_var=gauss_var, levy_atoms=tuple(jump))


def log_moment(tr: LevyTriple, p: int = 1) -> float:
    """p-th logarithmic moment of the jump measure,
    sum over |x| > 1 of w * log(1+|x|)^p.  Always finite here."""
    if not (isinstance(p, int) and p >= 1):
        raise InvalidInput(f"p must be an integer >= 1, got {p!r}")
    return sum(w * math.log(1.0 + abs(x)) ** p
               for x, w in tr.levy_atoms if abs(x) > 1.0)


def scale_triple(c: float, tr: LevyTriple) -> LevyTriple:
    """Triple of the dilated law (the law of c*X for X with triple tr).

    Jump atoms move to c*x with unchanged weights, the Gaussian variance
    picks up c^2, and the drift absorbs the compensator mismatch:
        a  ->  c a + sum_x w (cx/(1+(cx)^2) - cx/(1+x^2)).
    """
    if not (c > 0.0 and math.isfinite(c)):
        raise InvalidInput(f"scale factor must be positive and finite, got {c!r}")
    corr = 0.0
    atoms = []
    for x, w in tr.levy_atoms:
        cx = c * x
        corr += w * (cx / (1.0 + cx * cx) - cx / (1.0 + x * x))
        atoms.append((cx, w))
    return LevyTriple(drift=c * tr.drift + corr,
                      gauss_var=c * c * tr.gauss_var,
                      levy_atoms=tuple(atoms))


def reflect_triple(tr: LevyTriple) -> LevyTriple:
    """Triple of the sign-flipped law (the law of -X)."""
    return LevyTriple(drift=-tr.drift, gauss_var=tr.gauss_var,
                      levy_atoms=tuple((-x, w) for x, w in tr.levy_atoms))
