"""Command-line front end.

Subcommands
-----------
expand       expand a function spec into truncated power-series coefficients
majorant     enclose M(f, r) = sum |a_n| r^n at one radius
bohr-radius  bisect for the largest r with M(f, r) <= ||f||
sharpness    table of (r, t*, m*, derivative at 1) for radii beyond 1/3
verify       run the full verification suite and report PASS/FAIL

Function specs are given as a positional argument: a path to a JSON file,
an inline JSON object, or ``-`` for stdin.  Schemas (see also specs.py):

    {"type": "coefficients", "coeffs": [[re, im], ...], "sup_norm_bound": 1.0}
    {"type": "blaschke", "zeros": [[re, im], ...], "front": [re, im]}
    {"type": "combo", "terms": [{"w": 0.5, "spec": {...blaschke...}}, ...]}

Radii are decimals or literal fractions like ``1/3``; a fraction parses to
the nearest float not exceeding the exact rational (1/3 itself is not
representable, and strict-inequality checks must land on the lower side).

The verify config file is JSON:

    {"inputs": [FunctionSpec, ...],      // extra explicit inputs
     "r_grid": [0, 0.1, 0.2, "1/3"],
     "seed": 0,                          // 64-bit; --seed overrides
     "counts": {"factor_grid": 20, "products": 100, "combos": 100,
                "properties": 10000, "lipschitz": 1000, "extraction": 32},
     "expect": "pass"}                   // or "violation" (needs r > 1/3)

Reports: human-readable text on stdout, a JSON document via --json PATH, CSV
tables via --csv PATH.  The JSON report is
{"command", "seed", "report": {verdict, witnesses, sharpness,
derivative_signs, radius, norm_used, flags}, "properties": {...},
"violations": [...], "runtime_seconds"} with the obvious per-command subset;
every number equals the library value bit-for-bit.

Exit codes: 0 all pass, 1 mathematical FAIL, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from ._kernels import BACKEND
from .blaschke import BlaschkeSpec, ConvexCombo, boundary_samples
from .bohr import (
    BohrReport,
    bohr_radius,
    boundary_derivative,
    sharpness_search,
    verify_theorem,
)
from .majorant import (
    ONE_THIRD,
    check_lipschitz,
    check_subadditivity,
    check_submultiplicativity,
    majorant_enclosure,
    monotone_in_r,
)
from .blaschke import factor_difference_norm_bound
from .series import (
    TruncatedSeries,
    coefficients_from_boundary,
    default_truncation_order,
)
from .specs import (
    FunctionSpec,
    SpecError,
    parse_function_spec,
    series_to_json,
)

DEFAULT_R_GRID = (0.0, 0.1, 0.2, ONE_THIRD)
DEFAULT_COUNTS = {
    "factor_grid": 20,
    "products": 100,
    "combos": 100,
    "properties": 10000,
    "lipschitz": 1000,
    "extraction": 32,
}
PROPERTY_RADII = (0.1, ONE_THIRD, 0.9)
LIPSCHITZ_RADII = (0.1, 0.25, ONE_THIRD)


class CliError(Exception):
    """Usage-level error; reported on stderr with exit code 2."""


def parse_radius(text: str) -> float:
    """Decimal, or 'p/q' rounded to the nearest float <= the exact rational."""
    text = text.strip()
    if "/" in text:
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"bad rational radius {text!r}: {exc}") from exc
        value = float(frac)
        if Fraction(value) > frac:
            value = math.nextafter(value, -math.inf)
        return value
    try:
        return float(text)
    except ValueError as exc:
        raise CliError(f"bad radius {text!r}") from exc


def _check_radius(r: float) -> float:
    if not 0.0 <= r < 1.0:
        raise CliError("radius must lie in [0,1)")
    return r


def load_spec(arg: str) -> FunctionSpec:
    """Positional SPEC argument: file path, inline JSON, or '-' for stdin."""
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text()
    else:
        text = arg
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"spec is not valid JSON: {exc}") from exc
    try:
        return parse_function_spec(obj)
    except SpecError as exc:
        raise CliError(str(exc)) from exc


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _write_csv(path: str | None, header: list[str], rows: list[list]) -> None:
    if path:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(header)
            writer.writerows(rows)


def _print_flags(flags) -> str:
    return ", ".join(flags) if flags else "-"


# ------------------------------- subcommands -------------------------------


def cmd_expand(args) -> int:
    spec = load_spec(args.spec)
    if spec.coefficients is not None:
        available = spec.coefficients.order
        order = available if args.order is None else args.order
        if order > available:
            print(
                f"warning: order clamped to {available} "
                "(coefficients variant cannot be extended)",
                file=sys.stderr,
            )
            order = available
    else:
        order = args.order if args.order is not None else default_truncation_order(ONE_THIRD)
    if order < 0:
        raise CliError("--order must be non-negative")
    series = spec.expand(order)
    print(f"expansion of {spec.label()} to order {series.order}")
    for n, c in enumerate(series.coeffs):
        print(f"  a[{n}] = {c.real} {c.imag:+}j")
    print(f"  sup_norm_bound = {series.sup_norm_bound}")
    _write_json(args.json, {"command": "expand", **series_to_json(series)})
    return 0


def cmd_majorant(args) -> int:
    spec = load_spec(args.spec)
    r = _check_radius(parse_radius(args.radius))
    if spec.coefficients is not None:
        series = spec.coefficients if args.order is None else spec.expand(args.order)
    else:
        order = args.order if args.order is not None else default_truncation_order(r)
        series = spec.expand(order)
    enc = majorant_enclosure(series, r)
    print(f"M(f, r) enclosure for {spec.label()}")
    print(f"  r     = {r}")
    print(f"  lo    = {enc.lo}")
    print(f"  hi    = {enc.hi}")
    print(f"  width = {enc.width}")
    print(f"  flags : {_print_flags(enc.flags)}")
    _write_json(
        args.json,
        {
            "command": "majorant",
            "r": r,
            "order": series.order,
            "lo": enc.lo,
            "hi": enc.hi,
            "flags": list(enc.flags),
        },
    )
    return 0


def cmd_bohr_radius(args) -> int:
    spec = load_spec(args.spec)
    tol = args.tol
    if tol <= 0.0:
        raise CliError("--tol must be positive")
    norm_lo, norm_hi, norm_flags = spec.norm_window()
    series = spec.expand(default_truncation_order(ONE_THIRD))
    radius = bohr_radius(
        series,
        tol,
        norm=(norm_lo, norm_hi),
        reexpand=spec.reexpander(),
    )
    flags = tuple(dict.fromkeys(radius.flags + norm_flags))
    report = BohrReport(
        verdict="PASS",
        radius=radius,
        norm_used=norm_lo if norm_lo == norm_hi else None,
        flags=flags,
    )
    print(f"Bohr radius report for {spec.label()}")
    print(f"  radius in [{radius.lo}, {radius.hi}]  (width {radius.width})")
    if norm_lo == norm_hi:
        print(f"  norm threshold = {norm_lo}")
    else:
        print(f"  norm window    = [{norm_lo}, {norm_hi}]")
    print(f"  flags : {_print_flags(flags)}")
    _write_json(
        args.json,
        {"command": "bohr-radius", "tol": tol, "norm_lo": norm_lo,
         "norm_hi": norm_hi, "report": report.to_json()},
    )
    return 0


def cmd_sharpness(args) -> int:
    radii = [_check_radius(parse_radius(r)) for r in args.radii]
    for r in radii:
        if r < ONE_THIRD:
            raise CliError(
                f"r = {r} is at most 1/3, where the majorant of every unit-ball "
                "function stays <= 1; sharpness needs r > 1/3"
            )
    rows = [sharpness_search(r) for r in radii]
    print(f"{'r':>20} {'t_star':>20} {'m_star':>20} {'deriv_at_1':>20}  flags")
    exit_code = 0
    for row in rows:
        deriv = boundary_derivative(row.r)
        print(
            f"{row.r!r:>20} {row.t_star!r:>20} {row.m_star!r:>20} {deriv!r:>20}  "
            f"{_print_flags(row.flags)}"
        )
        if not row.flags and not (0.0 < row.t_star < 1.0 and row.m_star > 1.0):
            exit_code = 1  # contract violation: should be impossible
    _write_json(
        args.json,
        {
            "command": "sharpness",
            "rows": [
                {
                    "r": row.r,
                    "t_star": row.t_star,
                    "m_star": row.m_star,
                    "derivative_at_one": boundary_derivative(row.r),
                    "flags": list(row.flags),
                }
                for row in rows
            ],
        },
    )
    _write_csv(
        args.csv,
        ["r", "t_star", "m_star", "derivative_at_one", "flags"],
        [
            [row.r, row.t_star, row.m_star, boundary_derivative(row.r),
             ";".join(row.flags)]
            for row in rows
        ],
    )
    return exit_code


# ------------------------------ verify suite -------------------------------


def _config_error(where: str, message: str) -> CliError:
    return CliError(f"config {where}: {message}")


def _load_verify_config(path: str | None) -> dict:
    if path is None:
        obj: dict = {}
    else:
        try:
            obj = json.loads(Path(path).read_text())
        except FileNotFoundError as exc:
            raise CliError(f"config file not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise CliError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise _config_error("", "expected a JSON object")
    known = {"inputs", "r_grid", "seed", "counts", "expect"}
    for key in obj:
        if key not in known:
            raise _config_error(f".{key}", "unknown key")

    config: dict = {}
    raw_inputs = obj.get("inputs", [])
    if not isinstance(raw_inputs, list):
        raise _config_error(".inputs", "expected a list")
    inputs = []
    for i, item in enumerate(raw_inputs):
        try:
            inputs.append(parse_function_spec(item, where=f"config.inputs[{i}]"))
        except SpecError as exc:
            raise CliError(str(exc)) from exc
    config["inputs"] = inputs

    raw_grid = obj.get("r_grid", list(DEFAULT_R_GRID))
    if not isinstance(raw_grid, list):
        raise _config_error(".r_grid", "expected a list")
    grid = []
    for i, item in enumerate(raw_grid):
        if isinstance(item, str):
            value = parse_radius(item)
        elif isinstance(item, (int, float)):
            value = float(item)
        else:
            raise _config_error(f".r_grid[{i}]", "expected a number or 'p/q'")
        if not 0.0 <= value < 1.0:
            raise _config_error(f".r_grid[{i}]", "radius must lie in [0,1)")
        grid.append(value)
    config["r_grid"] = grid

    seed = obj.get("seed", 0)
    if not isinstance(seed, int):
        raise _config_error(".seed", "expected an integer")
    config["seed"] = seed

    counts = dict(DEFAULT_COUNTS)
    raw_counts = obj.get("counts", {})
    if not isinstance(raw_counts, dict):
        raise _config_error(".counts", "expected an object")
    for key, value in raw_counts.items():
        if key not in DEFAULT_COUNTS:
            raise _config_error(f".counts.{key}", "unknown count")
        if not isinstance(value, int) or value < 0:
            raise _config_error(f".counts.{key}", "expected a non-negative integer")
        counts[key] = value
    config["counts"] = counts

    expect = obj.get("expect", "pass")
    if expect not in ("pass", "violation"):
        raise _config_error(".expect", "expected 'pass' or 'violation'")
    if expect == "violation" and not any(r > ONE_THIRD for r in grid):
        raise _config_error(".expect", "'violation' needs r_grid entries beyond 1/3")
    config["expect"] = expect
    return config


def _disk_point(rng: random.Random, cap: float) -> complex:
    rad = cap * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return complex(rad * math.cos(theta), rad * math.sin(theta))


def _random_blaschke(rng: random.Random, max_degree: int, cap: float) -> BlaschkeSpec:
    degree = rng.randint(1, max_degree)
    return BlaschkeSpec(tuple(_disk_point(rng, cap) for _ in range(degree)))


def _random_combo(rng: random.Random, max_terms: int) -> ConvexCombo:
    k = rng.randint(1, max_terms)
    raw = [rng.random() + 1e-3 for _ in range(k)]
    total = math.fsum(raw)
    terms = tuple((w / total, _random_blaschke(rng, 6, 0.9)) for w in raw)
    return ConvexCombo(terms)


def _random_series(rng: random.Random, order: int) -> TruncatedSeries:
    return TruncatedSeries(
        tuple(
            complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
            for _ in range(order + 1)
        )
    )


def _suite_inputs(rng: random.Random, counts: dict) -> list[FunctionSpec]:
    inputs: list[FunctionSpec] = []
    n_grid = counts["factor_grid"]
    for i in range(n_grid):
        t = 0.99 if i == n_grid - 1 else 0.95 * (i + 1) / n_grid
        inputs.append(FunctionSpec(blaschke=BlaschkeSpec((complex(t, 0.0),))))
    for _ in range(counts["products"]):
        inputs.append(FunctionSpec(blaschke=_random_blaschke(rng, 6, 0.9)))
    for _ in range(counts["combos"]):
        inputs.append(FunctionSpec(combo=_random_combo(rng, 4)))
    return inputs


def _property_sections(rng: random.Random, counts: dict) -> dict:
    sections: dict = {}

    n = counts["properties"]
    fails, min_gap = 0, math.inf
    for _ in range(n):
        f = _random_series(rng, 16)
        g = _random_series(rng, 16)
        alpha = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        beta = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        for r in PROPERTY_RADII:
            res = check_subadditivity(f, g, alpha, beta, r)
            fails += not res.passed
            min_gap = min(min_gap, res.gap)
    sections["subadditivity"] = {
        "instances": n, "radii": list(PROPERTY_RADII),
        "failures": fails, "min_gap": min_gap,
    }

    fails, min_gap = 0, math.inf
    for _ in range(n):
        f = _random_series(rng, 16)
        g = _random_series(rng, 16)
        for r in PROPERTY_RADII:
            res = check_submultiplicativity(f, g, r)
            fails += not res.passed
            min_gap = min(min_gap, res.gap)
    sections["submultiplicativity"] = {
        "instances": n, "radii": list(PROPERTY_RADII),
        "failures": fails, "min_gap": min_gap,
    }

    fails, min_gap = 0, math.inf
    pairs = [(a, b) for a in PROPERTY_RADII for b in PROPERTY_RADII if a < b]
    for _ in range(n):
        f = _random_series(rng, 16)
        for r1, r2 in pairs:
            res = monotone_in_r(f, r1, r2)
            fails += not res.passed
            min_gap = min(min_gap, res.gap)
    sections["monotonicity"] = {
        "instances": n, "radii": list(PROPERTY_RADII),
        "failures": fails, "min_gap": min_gap,
    }

    n = counts["lipschitz"]
    fails, min_gap = 0, math.inf
    from .blaschke import factor_coefficients

    for _ in range(n):
        a = _disk_point(rng, 0.9)
        b = _disk_point(rng, 0.9)
        f = factor_coefficients(a, 32)
        g = factor_coefficients(b, 32)
        norm = factor_difference_norm_bound(a, b, 32)
        for r in LIPSCHITZ_RADII:
            res = check_lipschitz(f, g, r, norm)
            fails += not res.passed
            min_gap = min(min_gap, res.gap)
    sections["lipschitz"] = {
        "pairs": n, "radii": list(LIPSCHITZ_RADII),
        "failures": fails, "min_gap": min_gap,
    }

    n = counts["extraction"]
    m = 256
    fails, worst = 0, 0.0
    for _ in range(n):
        spec = _random_blaschke(rng, 6, 0.95)
        rho = max(abs(z) for z in spec.zeros)
        first = coefficients_from_boundary(
            boundary_samples(spec, m), 16, m, decay_radius=rho
        )
        second = coefficients_from_boundary(
            boundary_samples(spec, 2 * m), 16, 2 * m, decay_radius=rho
        )
        assert first.aliasing is not None
        for n_c in range(17):
            change = abs(first.series.coeffs[n_c] - second.series.coeffs[n_c])
            allowance = first.aliasing[n_c] + 1e-12
            if change > allowance:
                fails += 1
            if allowance > 0:
                worst = max(worst, change / allowance)
    sections["extraction_stability"] = {
        "products": n, "sample_count": m,
        "failures": fails, "worst_ratio": worst,
    }
    return sections


def cmd_verify(args) -> int:
    started = time.perf_counter()
    config = _load_verify_config(args.config)
    seed = args.seed if args.seed is not None else config["seed"]
    rng = random.Random(seed)

    inputs = config["inputs"] + _suite_inputs(rng, config["counts"])
    report = verify_theorem(inputs, config["r_grid"])
    properties = _property_sections(rng, config["counts"])

    violations = []
    if config["expect"] == "violation":
        for r in config["r_grid"]:
            if r > ONE_THIRD:
                row = sharpness_search(r)
                violations.append(
                    {
                        "r": r,
                        "t_star": row.t_star,
                        "m_star": row.m_star,
                        "violation_found": row.m_star > 1.0,
                    }
                )

    prop_ok = all(section["failures"] == 0 for section in properties.values())
    violations_ok = all(v["violation_found"] for v in violations)
    overall_pass = report.verdict == "PASS" and prop_ok and violations_ok
    verdict = "PASS" if overall_pass else "FAIL"
    runtime = time.perf_counter() - started

    asserted = [w for w in report.witnesses if w.asserted]
    print(f"bohrineq verify  (seed={seed}, backend={BACKEND})")
    print(
        f"theorem: {len(asserted)} asserted witnesses over {len(inputs)} inputs "
        f"x {len(config['r_grid'])} radii -> {report.verdict}"
    )
    for name, section in properties.items():
        status = "PASS" if section["failures"] == 0 else "FAIL"
        size = section.get("instances", section.get("pairs", section.get("products")))
        print(f"{name}: {size} instances, {section['failures']} failures -> {status}")
    print("sharpness rows (r, t*, m*):")
    for row in report.sharpness:
        print(f"  r={row.r}  t*={row.t_star}  m*={row.m_star}")
    for check in report.derivative_signs:
        mark = "ok" if check.ok else "FAIL"
        print(
            f"derivative at t=1, r={check.r}: {check.value} "
            f"(expected sign {check.expected}) {mark}"
        )
    if violations:
        found = sum(v["violation_found"] for v in violations)
        print(f"expected violations beyond 1/3: {found}/{len(violations)} found")
    print(f"verdict: {verdict}  ({runtime:.2f} s)")

    payload = {
        "command": "verify",
        "version": __version__,
        "backend": BACKEND,
        "seed": seed,
        "counts": config["counts"],
        "r_grid": config["r_grid"],
        "expect": config["expect"],
        "report": report.to_json(),
        "properties": properties,
        "violations": violations,
        "verdict": verdict,
        "runtime_seconds": runtime,
    }
    _write_json(args.json, payload)
    _write_csv(
        args.csv,
        ["input", "label", "r", "lo", "hi", "norm_lo", "norm_hi",
         "asserted", "passed", "flags"],
        [
            [w.input_index, w.label, w.r, w.enclosure.lo, w.enclosure.hi,
             w.norm_lo, w.norm_hi, w.asserted, w.passed, ";".join(w.flags)]
            for w in report.witnesses
        ],
    )
    return 0 if overall_pass else 1


# --------------------------------- wiring ----------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrineq",
        description="Numerical exploration of the power-series majorant "
        "inequality on the unit disk.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a spec into series coefficients")
    p.add_argument("spec", help="function spec: path, inline JSON, or '-'")
    p.add_argument("--order", type=int, default=None, metavar="N")
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("majorant", help="enclose M(f, r) at one radius")
    p.add_argument("spec", help="function spec: path, inline JSON, or '-'")
    p.add_argument("--radius", required=True, metavar="R")
    p.add_argument("--order", type=int, default=None, metavar="N")
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_majorant)

    p = sub.add_parser("bohr-radius", help="bisect for the Bohr radius")
    p.add_argument("spec", help="function spec: path, inline JSON, or '-'")
    p.add_argument("--tol", type=float, default=1e-9, metavar="T")
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_bohr_radius)

    p = sub.add_parser(
        "sharpness", help="maximizer table for radii beyond 1/3"
    )
    p.add_argument("radii", nargs="+", metavar="R")
    p.add_argument("--json", default=None, metavar="PATH")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--config", default=None, metavar="PATH")
    p.add_argument("--seed", type=int, default=None, metavar="S")
    p.add_argument("--json", default=None, metavar="PATH")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
