"""Bohr radii, sharpness of the constant 1/3, and batch verification.

The Bohr radius of f (relative to a norm threshold) is
sup{ r in [0, 1) : M(f, r) <= ||f||_inf }.  Since M(f, .) is non-decreasing,
bisection with enclosures gives an interval certified from both sides: a
radius is accepted only when the *upper* end of the majorant enclosure stays
below the threshold, and rejected only when the *lower* end exceeds it.

For a single Blaschke factor everything is explicit.  Setting the closed
form (t + (1 - 2 t^2) r) / (1 - t r) equal to 1:

    t + r - 2 t^2 r = 1 - t r  <=>  r (1 - t)(1 + 2t) = 1 - t  <=>  r = 1/(1 + 2t),

which decreases to 1/3 as t -> 1: no uniform radius beyond 1/3 is possible.
Differentiating in t and clearing the denominator leaves the quadratic
2 r^2 t^2 - 4 r t + 1 + r^2, whose interior root

    t* = (2 - sqrt(2 (1 - r^2))) / (2 r)

is the maximizer of the factor majorant for r > 1/3; the maximum value
exceeds 1 there, which is the sharpness half of the story.  At t = 1 the
t-derivative simplifies to (1 - 3r)/(1 - r): positive below 1/3, zero at
1/3, negative above.  Both simplifications are oracle-checked in the tests
(finite differences, golden-section search, bisection on the closed form).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .majorant import (
    ONE_THIRD,
    Enclosure,
    factor_majorant_closed_form,
    majorant_enclosure,
)
from .series import TruncatedSeries, default_truncation_order
from .specs import FunctionSpec

AT_BOUNDARY = "AT-BOUNDARY"
CONSTANT = "CONSTANT"
INDETERMINATE = "INDETERMINATE"
DEGENERATE = "DEGENERATE"

THEOREM_TOL = 1e-9
SHARPNESS_RADII = (0.34, 0.4, 0.5, 0.75, 0.9)
DERIVATIVE_SIGN_RADII = (0.3, ONE_THIRD, 0.35)

_INSIDE, _OUTSIDE, _UNDECIDED = 1, -1, 0


def bohr_radius(
    f: TruncatedSeries,
    tol: float = 1e-9,
    *,
    norm: float | tuple[float, float] | None = None,
    reexpand: Callable[[int], TruncatedSeries] | None = None,
    max_iter: int = 200,
    max_order: int = 1 << 17,
) -> Enclosure:
    """Enclosure of width <= tol around sup{r : M(f, r) <= norm}.

    ``norm`` defaults to f.sup_norm_bound and is treated as the threshold;
    pass a (lo, hi) window when the norm itself is only known to an interval.
    When a midpoint comparison is indeterminate (the majorant enclosure
    straddles the threshold), the truncation order is raised through
    ``reexpand`` before anything is guessed; without a re-expander the
    current certified bracket is returned flagged INDETERMINATE.

    A constant series has M(f, r) = ||f|| for every r; by convention its
    radius is [1, 1], flagged CONSTANT.  When no radius up to 1 - tol can be
    refuted (monotone partial sums never exceed the threshold), the result
    is [1 - tol, 1] flagged AT-BOUNDARY.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if norm is None:
        if f.sup_norm_bound is None:
            raise ValueError("f carries no sup-norm bound; pass norm= explicitly")
        norm = f.sup_norm_bound
    if isinstance(norm, tuple):
        t_lo, t_hi = float(norm[0]), float(norm[1])
        if t_lo > t_hi:
            raise ValueError("norm window must satisfy lo <= hi")
    else:
        t_lo = t_hi = float(norm)

    if f.is_constant():
        return Enclosure(1.0, 1.0, (CONSTANT,))
    if f.moduli[0] > t_hi:
        raise ValueError(
            "threshold lies below |a_0|; no radius satisfies M(f, r) <= norm"
        )

    current = f

    def classify(r: float) -> int:
        nonlocal current
        while True:
            enc = majorant_enclosure(current, r)
            if enc.hi <= t_lo:
                return _INSIDE
            if enc.lo > t_hi:
                return _OUTSIDE
            if reexpand is None or current.order >= max_order:
                return _UNDECIDED
            current = reexpand(min(max(2 * current.order, 16), max_order))

    r_top = 1.0 - tol
    top = classify(r_top)
    if top is _INSIDE:
        return Enclosure(r_top, 1.0, (AT_BOUNDARY,))
    if top is _UNDECIDED:
        # The partial sums are monotone in r, so no radius below r_top is
        # refutable either: certified in the no-counterexample sense only.
        return Enclosure(r_top, 1.0, (AT_BOUNDARY,))

    # M(f, 0) = |a_0| <= threshold (construction invariant), so 0 is inside.
    lo, hi = 0.0, r_top
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        side = classify(mid)
        if side is _INSIDE:
            lo = mid
        elif side is _OUTSIDE:
            hi = mid
        else:
            return Enclosure(lo, hi, (INDETERMINATE,))
    return Enclosure(lo, hi)


def factor_bohr_radius_closed_form(t: float) -> float:
    """Bohr radius 1/(1 + 2t) of a single factor with |a| = t in (0, 1)."""
    t = float(t)
    if not 0.0 < t < 1.0:
        raise ValueError("t must lie in (0, 1)")
    return 1.0 / (1.0 + 2.0 * t)


def boundary_derivative(r: float) -> float:
    """d/dt of the factor majorant at t = 1, simplified to (1 - 3r)/(1 - r).

    Positive for r < 1/3 and negative for r > 1/3: pushing |a| off 1 raises
    the majorant exactly when r exceeds 1/3.
    """
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    return (1.0 - 3.0 * r) / (1.0 - r)


@dataclass(frozen=True)
class SharpnessResult:
    """Interior maximizer of t -> M(phi_t, r) and the maximum value."""

    r: float
    t_star: float
    m_star: float
    flags: tuple[str, ...] = ()


def sharpness_search(r: float) -> SharpnessResult:
    """Maximize the factor majorant over t in [0, 1] for r > 1/3.

    The critical point solves 2 r^2 t^2 - 4 r t + 1 + r^2 = 0, interior root
    t* = (2 - sqrt(2 (1 - r^2))) / (2 r); the maximum m* exceeds 1, which is
    what rules out any Bohr radius beyond 1/3.  At r = 1/3 exactly the
    critical point degenerates to t = 1 with value 1 (flag DEGENERATE);
    below 1/3 there is nothing to search for and the call is rejected.
    """
    r = float(r)
    if r < ONE_THIRD:
        raise ValueError("sharpness requires r > 1/3")
    if r >= 1.0:
        raise ValueError("radius must lie in [0, 1)")
    if r == ONE_THIRD:
        return SharpnessResult(r, 1.0, 1.0, (DEGENERATE,))
    t_star = (2.0 - math.sqrt(2.0 * (1.0 - r * r))) / (2.0 * r)
    m_star = factor_majorant_closed_form(t_star, r)
    return SharpnessResult(r, t_star, m_star)


# ------------------------------ batch report -------------------------------


@dataclass(frozen=True)
class TheoremWitness:
    """One (input, radius) check: M(f, r).hi against the norm window."""

    input_index: int
    label: str
    r: float
    enclosure: Enclosure
    norm_lo: float
    norm_hi: float
    asserted: bool
    passed: bool | None  # None: not asserted, or indeterminate
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class DerivativeSignCheck:
    r: float
    value: float
    expected: str  # "+", "0", "-"
    ok: bool


@dataclass(frozen=True)
class BohrReport:
    """Structured result of a Bohr-radius computation or batch verification."""

    verdict: str  # PASS | FAIL | INDETERMINATE
    witnesses: tuple[TheoremWitness, ...] = ()
    sharpness: tuple[SharpnessResult, ...] = ()
    derivative_signs: tuple[DerivativeSignCheck, ...] = ()
    radius: Enclosure | None = None
    norm_used: float | None = None
    flags: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": [
                {
                    "input": w.input_index,
                    "label": w.label,
                    "r": w.r,
                    "lo": w.enclosure.lo,
                    "hi": w.enclosure.hi,
                    "norm_lo": w.norm_lo,
                    "norm_hi": w.norm_hi,
                    "asserted": w.asserted,
                    "passed": w.passed,
                    "flags": list(w.flags) + list(w.enclosure.flags),
                }
                for w in self.witnesses
            ],
            "sharpness": [
                {
                    "r": s.r,
                    "t_star": s.t_star,
                    "m_star": s.m_star,
                    "derivative_at_one": boundary_derivative(s.r),
                    "flags": list(s.flags),
                }
                for s in self.sharpness
            ],
            "derivative_signs": [
                {"r": d.r, "value": d.value, "expected": d.expected, "ok": d.ok}
                for d in self.derivative_signs
            ],
            "radius": None
            if self.radius is None
            else {
                "lo": self.radius.lo,
                "hi": self.radius.hi,
                "flags": list(self.radius.flags),
            },
            "norm_used": self.norm_used,
            "flags": list(self.flags),
        }


def _expected_sign(r: float) -> str:
    if r < ONE_THIRD:
        return "+"
    if r == ONE_THIRD:
        return "0"
    return "-"


def _sign_ok(value: float, expected: str) -> bool:
    if expected == "+":
        return value > 0.0
    if expected == "-":
        return value < 0.0
    return abs(value) <= 1e-12


def verify_theorem(
    inputs: Sequence[FunctionSpec], r_grid: Sequence[float]
) -> BohrReport:
    """Check M(f, r) <= ||f|| on every input for every grid radius <= 1/3.

    Witnesses at radii beyond 1/3 are still computed (the enclosures are
    interesting there) but not asserted.  A witness passes when the certified
    upper end of the majorant enclosure stays within THEOREM_TOL of the
    norm window's lower end; it fails only when the lower end certifiably
    exceeds the window; anything in between is recorded as indeterminate.
    The report also carries the input-independent sharpness rows (r > 1/3
    has an interior maximizer with value > 1) and the sign pattern of the
    boundary derivative around 1/3.  Per-input failures never abort the
    batch.
    """
    radii = [float(r) for r in r_grid]
    for r in radii:
        if not 0.0 <= r < 1.0:
            raise ValueError("grid radii must lie in [0, 1)")

    witnesses: list[TheoremWitness] = []
    max_r = max(radii, default=0.0)
    order = max(default_truncation_order(max_r), default_truncation_order(ONE_THIRD))
    for idx, spec in enumerate(inputs):
        label = spec.label()
        norm_lo, norm_hi, norm_flags = spec.norm_window()
        series = spec.expand(order)
        for r in radii:
            enc = majorant_enclosure(series, r)
            asserted = r <= ONE_THIRD
            passed: bool | None = None
            if asserted:
                if enc.hi <= norm_lo + THEOREM_TOL:
                    passed = True
                elif enc.lo > norm_hi + THEOREM_TOL:
                    passed = False
            witnesses.append(
                TheoremWitness(
                    idx, label, r, enc, norm_lo, norm_hi, asserted, passed, norm_flags
                )
            )

    sharpness = tuple(sharpness_search(r) for r in SHARPNESS_RADII)
    signs = tuple(
        DerivativeSignCheck(
            r,
            boundary_derivative(r),
            _expected_sign(r),
            _sign_ok(boundary_derivative(r), _expected_sign(r)),
        )
        for r in DERIVATIVE_SIGN_RADII
    )

    sharp_ok = all(
        0.0 < s.t_star < 1.0 and s.m_star > 1.0 for s in sharpness
    )
    signs_ok = all(d.ok for d in signs)
    asserted = [w for w in witnesses if w.asserted]
    if any(w.passed is False for w in asserted) or not sharp_ok or not signs_ok:
        verdict = "FAIL"
    elif any(w.passed is None for w in asserted):
        verdict = "INDETERMINATE"
    else:
        verdict = "PASS"
    return BohrReport(verdict, tuple(witnesses), sharpness, signs)
