"""Finite Blaschke products and their convex combinations.

A finite Blaschke product is front * prod_k (z - z_k) / (1 - conj(z_k) z)
with all |z_k| < 1 and |front| = 1.  It maps the closed disk to itself and
has modulus exactly 1 on the unit circle, so its sup norm is exactly 1.  A
single factor expands in closed form:

    (z - a) / (1 - conj(a) z) = -a + sum_(n>=1) conj(a)^(n-1) (1 - |a|^2) z^n

which is the workhorse for everything downstream: products are Cauchy
products of factor expansions, convex combinations are weighted sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels import blaschke_circle_samples, cauchy_product
from .series import TruncatedSeries, sup_norm_upper_bound

_FRONT_TOL = 1e-12


@dataclass(frozen=True)
class BlaschkeSpec:
    """An explicit finite Blaschke product: zeros in the open disk, optional
    unimodular front factor (needed to realize e.g. the constant -1)."""

    zeros: tuple[complex, ...] = ()
    front_factor: complex = 1.0 + 0j

    def __post_init__(self) -> None:
        zeros = tuple(complex(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zeros)
        for k, z in enumerate(zeros):
            if abs(z) >= 1.0:  # strict: no tolerance on this side
                raise ValueError(f"zero z_{k} has modulus {abs(z)!r}, must be < 1")
        front = complex(self.front_factor)
        if abs(abs(front) - 1.0) > _FRONT_TOL:
            raise ValueError(f"front factor has modulus {abs(front)!r}, must be 1")
        object.__setattr__(self, "front_factor", front)

    @property
    def degree(self) -> int:
        return len(self.zeros)


@dataclass(frozen=True)
class ConvexCombo:
    """Convex combination of finite Blaschke products: non-negative weights
    summing to 1.  Stays in the unit ball of the disk algebra."""

    terms: tuple[tuple[float, BlaschkeSpec], ...]

    def __post_init__(self) -> None:
        terms = tuple((float(w), spec) for w, spec in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("a convex combination needs at least one term")
        for k, (w, spec) in enumerate(terms):
            if w < 0.0:
                raise ValueError(f"weight {k} is negative ({w!r})")
            if not isinstance(spec, BlaschkeSpec):
                raise TypeError(f"term {k} is not a BlaschkeSpec")
        total = math.fsum(w for w, _ in terms)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {total!r}, must be 1 within 1e-12")


def evaluate(spec: BlaschkeSpec, z: complex) -> complex:
    """Evaluate the product at a point of the closed disk."""
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise ValueError(f"|z| = {abs(z)!r} lies outside the closed unit disk")
    w = spec.front_factor
    for a in spec.zeros:
        w = w * (z - a) / (1.0 - a.conjugate() * z)
    return w


def boundary_samples(spec: BlaschkeSpec, m_points: int) -> list[complex]:
    """Values on the uniform circle grid e^(2*pi*i*j/M), j = 0..M-1."""
    return blaschke_circle_samples(spec.zeros, spec.front_factor, m_points)


def _factor_coeffs(a: complex, order: int) -> list[complex]:
    ac = a.conjugate()
    scale = 1.0 - (a.real * a.real + a.imag * a.imag)
    coeffs = [-a]
    power = complex(1.0)
    for _ in range(order):
        coeffs.append(power * scale)
        power *= ac
    return coeffs


def factor_coefficients(a: complex, order: int) -> TruncatedSeries:
    """Closed-form expansion of a single factor (z - a)/(1 - conj(a) z):
    coefficient 0 is -a, coefficient n >= 1 is conj(a)^(n-1) (1 - |a|^2)."""
    a = complex(a)
    if abs(a) >= 1.0:
        raise ValueError(f"|a| = {abs(a)!r}, a Blaschke factor needs |a| < 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries(tuple(_factor_coeffs(a, order)), 1.0)


def product_coefficients(spec: BlaschkeSpec, order: int) -> TruncatedSeries:
    """Expansion of a finite Blaschke product: Cauchy product of the factor
    expansions, scaled by the front factor.  Exact up to the stated order
    (each factor expansion is exact there), sup norm exactly 1."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [spec.front_factor] + [0j] * order
    for a in spec.zeros:
        coeffs = cauchy_product(coeffs, _factor_coeffs(a, order), order)
    return TruncatedSeries(tuple(coeffs), 1.0)


def combo_coefficients(combo: ConvexCombo, order: int) -> TruncatedSeries:
    """Weighted sum of the term expansions; convexity keeps sup norm <= 1."""
    if len(combo.terms) == 1 and combo.terms[0][0] == 1.0:
        # degenerate combo canonicalizes to the bare product
        return product_coefficients(combo.terms[0][1], order)
    acc = [0j] * (order + 1)
    for w, spec in combo.terms:
        term = product_coefficients(spec, order)
        for n, c in enumerate(term.coeffs):
            acc[n] += w * c
    return TruncatedSeries(tuple(acc), 1.0)


def factor_difference_norm_bound(a: complex, b: complex, order: int = 32) -> float:
    """Certified upper bound on ||phi_a - phi_b||_inf.

    The difference of the degree-``order`` partial expansions is an exact
    polynomial, bounded by sup_norm_upper_bound; each discarded factor tail
    is a geometric series with sum_(n>order) |coef| = (1 + |a|) |a|^order.
    """
    fa = factor_coefficients(a, order)
    fb = factor_coefficients(b, order)
    diff = TruncatedSeries(
        tuple(x - y for x, y in zip(fa.coeffs, fb.coeffs))
    )
    ta, tb = abs(complex(a)), abs(complex(b))
    tail = (1.0 + ta) * ta**order + (1.0 + tb) * tb**order
    return sup_norm_upper_bound(diff).value + tail
