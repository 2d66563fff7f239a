"""The majorant function M(f, r) = sum_n |a_n| r^n with certified enclosures.

For a truncated series with sup-norm bound C, the Cauchy estimate gives
|a_n| <= C for every discarded coefficient, so

    M(f, r)  in  [ sum_(n<=N) |a_n| r^n ,  same + C r^(N+1) / (1 - r) ].

Without a bound the enclosure degenerates to a point and is flagged
POLYNOMIAL-ONLY: it is valid only under the reading that f *is* the stored
polynomial.  Downstream consumers must propagate the flags; silent loss of
rigor is the one unforgivable bug in this module.

The structural facts checked here (with enclosures plus a fixed 1e-12
roundoff allowance, so mathematical failure is separated from float noise):

  subadditivity        M(alpha f + beta g, r) <= |alpha| M(f,r) + |beta| M(g,r)
  submultiplicativity  M(f g, r) <= M(f,r) M(g,r)          for 0 <= r < 1
  Lipschitz in f       |M(f,r) - M(g,r)| <= (3/2) ||f-g||_inf   for r <= 1/3
                       (generic constant 1/(1-r) otherwise, flagged GENERIC)
  monotone in r        M(f, r1) <= M(f, r2)                for r1 <= r2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels import power_sum
from .series import TruncatedSeries, series_add, series_mul

# Nearest double below the exact rational 1/3; comparisons r <= ONE_THIRD
# therefore implement "r <= 1/3" exactly over the representable radii.
ONE_THIRD = 1.0 / 3.0

COMPARISON_TOL = 1e-12

POLYNOMIAL_ONLY = "POLYNOMIAL-ONLY"
ESTIMATED_BOUND = "ESTIMATED-BOUND"
GENERIC = "GENERIC"


@dataclass(frozen=True)
class Enclosure:
    """A closed interval [lo, hi] certifying lo <= true value <= hi."""

    lo: float
    hi: float
    flags: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("enclosure endpoints must be finite")
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo={self.lo!r} > hi={self.hi!r}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol


def majorant_enclosure(f: TruncatedSeries, r: float) -> Enclosure:
    """Enclosure of M(f, r) from the stored coefficients plus the tail bound."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    lo = power_sum(f.moduli, r)
    if f.sup_norm_bound is None:
        return Enclosure(lo, lo, (POLYNOMIAL_ONLY,))
    tail = f.sup_norm_bound * r ** (f.order + 1) / (1.0 - r)
    flags = (ESTIMATED_BOUND,) if f.bound_is_estimate else ()
    return Enclosure(lo, lo + tail, flags)


def factor_majorant_closed_form(t: float, r: float) -> float:
    """M(phi_a, r) for a single Blaschke factor with |a| = t:

        (t + (1 - 2 t^2) r) / (1 - t r),

    which only depends on |a| because every coefficient modulus of the factor
    expansion does.  Equals 1 at t = 1 and stays <= 1 for all r <= 1/3.
    """
    t = float(t)
    r = float(r)
    if not 0.0 <= t <= 1.0:
        raise ValueError("t stands for |a| and must lie in [0, 1]")
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    return (t + (1.0 - 2.0 * t * t) * r) / (1.0 - t * r)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an inequality check on enclosures.

    ``gap`` is rhs.hi - lhs.lo, the certified slack: the check passes iff
    gap >= -COMPARISON_TOL.  Truthiness is the pass flag.
    """

    passed: bool
    gap: float
    lhs: Enclosure
    rhs: Enclosure
    flags: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


def _require_common_order(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.order != g.order:
        raise ValueError(
            f"series orders differ ({f.order} vs {g.order}); "
            "truncate to a common order first"
        )


def check_subadditivity(
    f: TruncatedSeries,
    g: TruncatedSeries,
    alpha: complex,
    beta: complex,
    r: float,
) -> CheckResult:
    """M(alpha f + beta g, r) <= |alpha| M(f, r) + |beta| M(g, r)."""
    _require_common_order(f, g)
    lhs = majorant_enclosure(series_add(f, g, alpha, beta), r)
    ef = majorant_enclosure(f, r)
    eg = majorant_enclosure(g, r)
    a, b = abs(complex(alpha)), abs(complex(beta))
    rhs = Enclosure(
        a * ef.lo + b * eg.lo,
        a * ef.hi + b * eg.hi,
        tuple(dict.fromkeys(ef.flags + eg.flags)),
    )
    gap = rhs.hi - lhs.lo
    return CheckResult(gap >= -COMPARISON_TOL, gap, lhs, rhs, lhs.flags + rhs.flags)


def check_submultiplicativity(
    f: TruncatedSeries, g: TruncatedSeries, r: float
) -> CheckResult:
    """M(f g, r) <= M(f, r) M(g, r).  Both sides are non-negative, so the
    product interval is just the product of endpoints."""
    _require_common_order(f, g)
    lhs = majorant_enclosure(series_mul(f, g), r)
    ef = majorant_enclosure(f, r)
    eg = majorant_enclosure(g, r)
    rhs = Enclosure(
        ef.lo * eg.lo, ef.hi * eg.hi, tuple(dict.fromkeys(ef.flags + eg.flags))
    )
    gap = rhs.hi - lhs.lo
    return CheckResult(gap >= -COMPARISON_TOL, gap, lhs, rhs, lhs.flags + rhs.flags)


def check_lipschitz(
    f: TruncatedSeries,
    g: TruncatedSeries,
    r: float,
    norm_fg: float,
) -> CheckResult:
    """|M(f, r) - M(g, r)| <= c(r) * ||f - g||_inf with c = 3/2 for r <= 1/3.

    ``norm_fg`` must be a certified upper bound on ||f - g||_inf.  The left
    side is bounded outward from the two enclosures, which can overshoot the
    true difference by the enclosure widths; the right side carries that
    slack so the comparison tests the mathematical claim, not the widths.
    For r > 1/3 the factor-specific constant 3/2 no longer applies and the
    generic constant 1/(1-r) is used instead, flagged GENERIC.
    """
    if f.sup_norm_bound is None or g.sup_norm_bound is None:
        raise ValueError("both series need sup-norm bounds for the Lipschitz check")
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    norm_fg = float(norm_fg)
    if norm_fg < 0.0:
        raise ValueError("norm_fg must be non-negative")
    if r <= ONE_THIRD:
        constant, flags = 1.5, ()
    else:
        constant, flags = 1.0 / (1.0 - r), (GENERIC,)
    ef = majorant_enclosure(f, r)
    eg = majorant_enclosure(g, r)
    outer = max(ef.hi - eg.lo, eg.hi - ef.lo, 0.0)
    inner = max(ef.lo - eg.hi, eg.lo - ef.hi, 0.0)
    slack = ef.width + eg.width
    bound = constant * norm_fg + slack
    gap = bound - outer
    return CheckResult(
        gap >= -COMPARISON_TOL,
        gap,
        Enclosure(inner, outer, ef.flags + eg.flags),
        Enclosure(bound, bound),
        flags + ef.flags + eg.flags,
    )


def monotone_in_r(f: TruncatedSeries, r1: float, r2: float) -> CheckResult:
    """M(f, r1) <= M(f, r2) for r1 <= r2 (every term |a_n| r^n is monotone)."""
    if not 0.0 <= r1 <= r2 < 1.0:
        raise ValueError("need 0 <= r1 <= r2 < 1")
    lhs = majorant_enclosure(f, r1)
    rhs = majorant_enclosure(f, r2)
    gap = rhs.hi - lhs.lo
    return CheckResult(gap >= -COMPARISON_TOL, gap, lhs, rhs, lhs.flags + rhs.flags)
