"""Ingestion-level description of a disk-algebra element.

A FunctionSpec is a tagged union: an explicit coefficient list (with optional
sup-norm bound), a finite Blaschke product, or a convex combination of
Blaschke products.  JSON forms:

    {"type": "coefficients", "coeffs": [[re, im], ...], "sup_norm_bound": 1.0}
    {"type": "blaschke", "zeros": [[re, im], ...], "front": [re, im]}
    {"type": "combo", "terms": [{"w": 0.5, "spec": {...blaschke...}}, ...]}

The bare series serialization {"coeffs": [...], "sup_norm_bound": ...} (the
output of the expand command) is accepted as a coefficients spec, so command
output can be fed back in.  Parse errors carry the position of the offending
field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blaschke import (
    BlaschkeSpec,
    ConvexCombo,
    combo_coefficients,
    product_coefficients,
)
from .series import TruncatedSeries, sup_norm_upper_bound

UNIT_BALL = "UNIT-BALL"
NORM_WINDOW = "NORM-WINDOW"


class SpecError(ValueError):
    """Malformed function spec; the message names the offending position."""


@dataclass(frozen=True)
class FunctionSpec:
    """Exactly one of ``coefficients``, ``blaschke``, ``combo`` is set."""

    coefficients: TruncatedSeries | None = None
    blaschke: BlaschkeSpec | None = None
    combo: ConvexCombo | None = None

    def __post_init__(self) -> None:
        present = sum(
            x is not None for x in (self.coefficients, self.blaschke, self.combo)
        )
        if present != 1:
            raise ValueError("exactly one variant must be present")

    def label(self) -> str:
        if self.coefficients is not None:
            return f"coefficients(order={self.coefficients.order})"
        if self.blaschke is not None:
            zs = ", ".join(_fmt_complex(z) for z in self.blaschke.zeros)
            return f"blaschke[{zs}]"
        assert self.combo is not None
        return f"combo({len(self.combo.terms)} terms)"

    def expand(self, order: int) -> TruncatedSeries:
        """Expansion to the requested order.  A coefficients spec cannot grow
        beyond its stored order; it is returned as-is in that case."""
        if self.blaschke is not None:
            return product_coefficients(self.blaschke, order)
        if self.combo is not None:
            return combo_coefficients(self.combo, order)
        assert self.coefficients is not None
        f = self.coefficients
        if order >= f.order:
            return f
        return TruncatedSeries(
            f.coeffs[: order + 1], f.sup_norm_bound, f.bound_is_estimate
        )

    def reexpander(self):
        """Order -> series callback for solvers that refine the truncation,
        or None when the spec cannot produce more coefficients."""
        if self.blaschke is not None:
            spec = self.blaschke
            return lambda n: product_coefficients(spec, n)
        if self.combo is not None:
            combo = self.combo
            return lambda n: combo_coefficients(combo, n)
        return None

    def norm_window(self) -> tuple[float, float, tuple[str, ...]]:
        """Certified window [lo, hi] for the sup norm, with caveat flags.

        Blaschke products have norm exactly 1.  A convex combination only
        satisfies ||f|| <= 1, but 1 is still the provable threshold for the
        inequality (the unit-ball statement), so the window is (1, 1) with a
        UNIT-BALL flag.  For raw coefficients the window comes from the grid
        maximum (a lower bound) and the certified upper bound, treating the
        series as an exact polynomial.
        """
        if self.blaschke is not None:
            return 1.0, 1.0, ()
        if self.combo is not None:
            return 1.0, 1.0, (UNIT_BALL,)
        assert self.coefficients is not None
        f = self.coefficients
        bound = sup_norm_upper_bound(f)
        hi = bound.value
        if f.sup_norm_bound is not None and not f.bound_is_estimate:
            hi = min(hi, f.sup_norm_bound)
        return bound.grid_max, hi, (NORM_WINDOW,)


# ----------------------------- JSON handling ------------------------------


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return f"{z.real}"
    return f"{z.real}{z.imag:+}j"


def _parse_complex(obj, where: str) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if (
        isinstance(obj, (list, tuple))
        and len(obj) == 2
        and all(isinstance(x, (int, float)) for x in obj)
    ):
        return complex(obj[0], obj[1])
    raise SpecError(f"{where}: expected [re, im] (or a real number)")


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def series_to_json(f: TruncatedSeries) -> dict:
    """{"coeffs": [[re, im], ...], "sup_norm_bound": number|null}.

    Estimated bounds are not certified, so they serialize as null.
    """
    bound = None if f.bound_is_estimate else f.sup_norm_bound
    return {
        "coeffs": [_complex_pair(c) for c in f.coeffs],
        "sup_norm_bound": bound,
    }


def series_from_json(obj, where: str = "series") -> TruncatedSeries:
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object")
    if "coeffs" not in obj:
        raise SpecError(f"{where}.coeffs: missing")
    raw = obj["coeffs"]
    if not isinstance(raw, list) or not raw:
        raise SpecError(f"{where}.coeffs: expected a non-empty list")
    coeffs = tuple(
        _parse_complex(c, f"{where}.coeffs[{i}]") for i, c in enumerate(raw)
    )
    bound = obj.get("sup_norm_bound")
    if bound is not None and not isinstance(bound, (int, float)):
        raise SpecError(f"{where}.sup_norm_bound: expected a number or null")
    try:
        return TruncatedSeries(coeffs, bound)
    except ValueError as exc:
        raise SpecError(f"{where}: {exc}") from exc


def _blaschke_from_json(obj, where: str) -> BlaschkeSpec:
    raw = obj.get("zeros", [])
    if not isinstance(raw, list):
        raise SpecError(f"{where}.zeros: expected a list")
    zeros = tuple(_parse_complex(z, f"{where}.zeros[{i}]") for i, z in enumerate(raw))
    front = _parse_complex(obj["front"], f"{where}.front") if "front" in obj else 1.0
    try:
        return BlaschkeSpec(zeros, front)
    except ValueError as exc:
        raise SpecError(f"{where}: {exc}") from exc


def parse_function_spec(obj, where: str = "spec") -> FunctionSpec:
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object")
    kind = obj.get("type")
    if kind is None and "coeffs" in obj:
        kind = "coefficients"  # bare series serialization
    if kind == "coefficients":
        return FunctionSpec(coefficients=series_from_json(obj, where))
    if kind == "blaschke":
        return FunctionSpec(blaschke=_blaschke_from_json(obj, where))
    if kind == "combo":
        raw = obj.get("terms")
        if not isinstance(raw, list) or not raw:
            raise SpecError(f"{where}.terms: expected a non-empty list")
        terms = []
        for i, term in enumerate(raw):
            if not isinstance(term, dict):
                raise SpecError(f"{where}.terms[{i}]: expected an object")
            if "w" not in term or not isinstance(term["w"], (int, float)):
                raise SpecError(f"{where}.terms[{i}].w: expected a number")
            if "spec" not in term or not isinstance(term["spec"], dict):
                raise SpecError(f"{where}.terms[{i}].spec: expected an object")
            inner = term["spec"]
            if inner.get("type", "blaschke") != "blaschke":
                raise SpecError(
                    f"{where}.terms[{i}].spec: combo terms must be blaschke specs"
                )
            terms.append(
                (term["w"], _blaschke_from_json(inner, f"{where}.terms[{i}].spec"))
            )
        try:
            return FunctionSpec(combo=ConvexCombo(tuple(terms)))
        except ValueError as exc:
            raise SpecError(f"{where}.terms: {exc}") from exc
    raise SpecError(
        f"{where}.type: expected 'coefficients', 'blaschke' or 'combo' "
        f"(got {kind!r})"
    )


def function_spec_to_json(spec: FunctionSpec) -> dict:
    if spec.coefficients is not None:
        out = series_to_json(spec.coefficients)
        out["type"] = "coefficients"
        return out
    if spec.blaschke is not None:
        return {
            "type": "blaschke",
            "zeros": [_complex_pair(z) for z in spec.blaschke.zeros],
            "front": _complex_pair(spec.blaschke.front_factor),
        }
    assert spec.combo is not None
    return {
        "type": "combo",
        "terms": [
            {
                "w": w,
                "spec": {
                    "type": "blaschke",
                    "zeros": [_complex_pair(z) for z in s.zeros],
                    "front": _complex_pair(s.front_factor),
                },
            }
            for w, s in spec.combo.terms
        ],
    }
