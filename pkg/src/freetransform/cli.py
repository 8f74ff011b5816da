"""Command-line front end.

Four commands: ``eval`` computes a class transform on a geometric t-grid
from a JSON input file, ``verify`` runs a named check suite, ``kernels``
tabulates a kernel's g both in closed form and by quadrature, ``info``
prints the built-in class/family table.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 input error, 3 domain error.  CSV output uses repr() floats (shortest
round-trip form, '.' decimal) and LF newlines so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .errors import DomainError, FreeTransformError, InvalidInput
from .kernels import kernel_g, kernel_g_quad, lclass, sself, ubeta
from .measures import LevyTriple
from .transforms import (
    LInfSpec,
    transform_lclass,
    transform_linf,
    transform_sself,
    transform_ubeta,
    voiculescu_id,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3

_DEFAULT_TOL = 1e-10
_CLASS_TAGS = ("uks", "ubk", "lk", "linf", "id")
_FAMILY_MAKERS = {"sself": sself, "ubeta": ubeta, "lclass": lclass}

# (needs k, smallest admissible k) per class tag; linf and id take no k
_K_RANGE = {"uks": 0, "ubk": 1, "lk": 0}


def default_tol() -> float:
    """Built-in tolerance, overridable through FREETRANSFORM_TOL."""
    raw = os.environ.get("FREETRANSFORM_TOL")
    if raw is None:
        return _DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise InvalidInput(f"FREETRANSFORM_TOL must be a number, got {raw!r}")
    if not (tol > 0.0 and math.isfinite(tol)):
        raise InvalidInput(f"FREETRANSFORM_TOL must be positive, got {raw!r}")
    return tol


# JSON parsing ------------------------------------------------------------

def _num(obj: dict, key: str, where: str, default=None) -> float:
    if key not in obj:
        if default is None:
            raise InvalidInput(f"missing field '{where}{key}'")
        return default
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise InvalidInput(f"field '{where}{key}' must be a number, got {val!r}")
    return float(val)


def _atom_list(obj: dict, where: str = ""):
    atoms = obj.get("atoms", [])
    if not isinstance(atoms, list):
        raise InvalidInput(f"field '{where}atoms' must be an array")
    out = []
    for i, entry in enumerate(atoms):
        if not isinstance(entry, dict):
            raise InvalidInput(f"field '{where}atoms[{i}]' must be an object")
        out.append((_num(entry, "x", f"{where}atoms[{i}]."),
                    _num(entry, "w", f"{where}atoms[{i}].")))
    return tuple(out)


def parse_triple(obj) -> LevyTriple:
    """{"a": real, "sigma2": real, "atoms": [{"x", "w"}, ...]}; a and
    sigma2 default to 0, atoms to none."""
    if not isinstance(obj, dict):
        raise InvalidInput("input JSON must be an object")
    known = {"a", "sigma2", "atoms"}
    for key in obj:
        if key not in known:
            raise InvalidInput(f"unknown field '{key}' in triple input")
    return LevyTriple(_num(obj, "a", "", default=0.0),
                      _num(obj, "sigma2", "", default=0.0),
                      _atom_list(obj))


def parse_linf_spec(obj) -> LInfSpec:
    """{"c": real, "atoms": [{"x": real in (-2,2], "w": real > 0}, ...]}."""
    if not isinstance(obj, dict):
        raise InvalidInput("input JSON must be an object")
    known = {"c", "atoms"}
    for key in obj:
        if key not in known:
            raise InvalidInput(f"unknown field '{key}' in linf input")
    from .measures import FiniteMeasure

    return LInfSpec(_num(obj, "c", "", default=0.0),
                    FiniteMeasure(_atom_list(obj)))


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read input file: {exc}")
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"input file is not valid JSON: {exc}")


# grids and output --------------------------------------------------------

def geometric_grid(t_min: float, t_max: float, steps: int):
    if not (t_min > 0.0 and math.isfinite(t_min)):
        raise InvalidInput(f"--t-min must be positive, got {t_min!r}")
    if not (t_max >= t_min and math.isfinite(t_max)):
        raise InvalidInput(f"--t-max must be >= --t-min, got {t_max!r}")
    if steps < 1:
        raise InvalidInput(f"--steps must be >= 1, got {steps!r}")
    if steps == 1:
        return [t_min]
    ratio = t_max / t_min
    return [t_min * ratio ** (i / (steps - 1)) for i in range(steps)]


def parse_grid(text: str):
    """'re0:re1:n,im0:im1:n' -> complex grid points, row-major over re."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInput(f"--grid must have two axes, got {text!r}")

    def axis(part: str, name: str):
        bits = part.split(":")
        if len(bits) != 3:
            raise InvalidInput(f"--grid {name} axis must be lo:hi:n, got {part!r}")
        try:
            lo, hi, n = float(bits[0]), float(bits[1]), int(bits[2])
        except ValueError:
            raise InvalidInput(f"--grid {name} axis must be numeric, got {part!r}")
        if n < 1 or hi < lo:
            raise InvalidInput(f"--grid {name} axis must have hi >= lo and n >= 1")
        if n == 1:
            return [lo]
        return [lo + (hi - lo) * i / (n - 1) for i in range(n)]

    res = axis(parts[0], "real")
    ims = axis(parts[1], "imaginary")
    return [complex(re, im) for re in res for im in ims]


def _write_rows(path, header: str, rows):
    text = header + "\n" + "".join(row + "\n" for row in rows)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# commands ----------------------------------------------------------------

def _evaluator(class_tag: str, k, data):
    if class_tag == "linf":
        spec = parse_linf_spec(data)
        return lambda t: transform_linf(spec, t).value
    tr = parse_triple(data)
    if class_tag == "id":
        return lambda t: voiculescu_id(tr, t).value
    if class_tag == "uks":
        return lambda t: transform_sself(k, tr, t).value
    if class_tag == "ubk":
        return lambda t: transform_ubeta(k, tr, t).value
    return lambda t: transform_lclass(k, tr, t).value


def _check_k(class_tag: str, k):
    if class_tag in _K_RANGE:
        if k is None:
            raise InvalidInput(f"--class {class_tag} requires --k")
        if k < _K_RANGE[class_tag]:
            raise InvalidInput(
                f"--k must be >= {_K_RANGE[class_tag]} for class {class_tag}, got {k}")
    elif k is not None:
        raise InvalidInput(f"--class {class_tag} does not take --k")


def _resolve_tol(args) -> float:
    return args.tol if args.tol is not None else default_tol()


def cmd_eval(args) -> int:
    _check_k(args.class_tag, args.k)
    # closed-form evaluation consumes no tolerance, but a broken env
    # override should fail loudly here too
    _resolve_tol(args)
    grid = geometric_grid(args.t_min, args.t_max, args.steps)
    V = _evaluator(args.class_tag, args.k, _load_json(args.input))
    rows = []
    for t in grid:
        v = V(t)
        rows.append(f"{t!r},{v.real!r},{v.imag!r}")
    _write_rows(args.out, "t,re_V,im_V", rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAIL


def cmd_kernels(args) -> int:
    maker = _FAMILY_MAKERS[args.family]
    lowest = 0 if args.family == "lclass" else 1
    if args.k < lowest:
        raise InvalidInput(f"--k must be >= {lowest} for family {args.family}, got {args.k}")
    fam = maker(args.k)
    tol = _resolve_tol(args)
    rows = []
    for z in parse_grid(args.grid):
        g = kernel_g(fam, z)
        gq = kernel_g_quad(fam, z, tol).value
        rows.append(f"{z.real!r},{z.imag!r},{g.real!r},{g.imag!r},"
                    f"{gq.real!r},{gq.imag!r},{abs(g - gq)!r}")
    _write_rows(args.out, "re_z,im_z,re_g,im_g,re_g_quad,im_g_quad,abs_diff", rows)
    return EXIT_OK


def cmd_info(args) -> int:
    print(f"freetransform {__version__}")
    print()
    print("classes (eval --class):")
    print("  id    plain infinitely divisible transform (no k)")
    print("  uks   k-times shrink-refined class, k >= 0 (k = 0 is id)")
    print("  ubk   power-time-change Bernstein class, k >= 1")
    print("  lk    k-th selfdecomposable class, k >= 0")
    print("  linf  fully scale-invariant class (no k; own JSON input)")
    print()
    print("kernel families (kernels --family): sself, ubeta, lclass")
    print(f"verify suites: {', '.join(list(SUITES) + ['all'])}")
    print(f"default tolerance: {default_tol()!r} (env FREETRANSFORM_TOL)")
    return EXIT_OK


# parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freetransform",
        description="Transforms of free counterparts of classical "
                    "infinitely divisible laws on the imaginary axis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a class transform on a t-grid")
    p_eval.add_argument("--class", dest="class_tag", required=True,
                        choices=_CLASS_TAGS)
    p_eval.add_argument("--k", type=int, default=None)
    p_eval.add_argument("--input", required=True, help="JSON input file")
    p_eval.add_argument("--t-min", type=float, default=0.5)
    p_eval.add_argument("--t-max", type=float, default=2.0)
    p_eval.add_argument("--steps", type=int, default=9)
    p_eval.add_argument("--tol", type=float, default=None)
    p_eval.add_argument("--out", default="-", help="output CSV path, '-' = stdout")
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument("suite", choices=list(SUITES) + ["all"])
    p_verify.set_defaults(fn=cmd_verify)

    p_kern = sub.add_parser("kernels", help="tabulate g closed form vs quadrature")
    p_kern.add_argument("--family", required=True, choices=sorted(_FAMILY_MAKERS))
    p_kern.add_argument("--k", type=int, required=True)
    p_kern.add_argument("--grid", default="-0.5:2:5,0.1:2:5")
    p_kern.add_argument("--tol", type=float, default=None)
    p_kern.add_argument("--out", default="-")
    p_kern.set_defaults(fn=cmd_kernels)

    p_info = sub.add_parser("info", help="list classes, families and defaults")
    p_info.set_defaults(fn=cmd_info)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FreeTransformError as exc:
        # convergence or non-finite failures are domain problems too
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
