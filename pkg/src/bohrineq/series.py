"""Truncated complex power series with provenance of the truncation error.

A :class:`TruncatedSeries` stores the coefficients a_0..a_N of a power series
f(z) = sum_n a_n z^n together with an optional number C >= ||f||_inf.  The
bound is what makes rigorous tail estimates possible downstream: by the
Cauchy estimate every |a_n| <= C, so the discarded tail of the majorant sum
is at most C * r^(N+1) / (1 - r).

All arithmetic is plain binary floating point; enclosures produced from these
series are certified up to roundoff (no interval arithmetic on coefficients).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence, Union

from ._kernels import (
    abs_values,
    cauchy_product,
    circle_nodes,
    dft_coefficients,
    max_abs_on_circle,
)

# Roundoff allowance when checking |a_n| <= C at construction time.
_CAUCHY_SLACK = 1e-12


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N plus an optional sup-norm bound.

    ``sup_norm_bound`` is a non-negative C with ||f||_inf <= C for the
    underlying function; ``bound_is_estimate`` marks bounds that were merely
    observed (e.g. the max modulus of boundary samples) rather than certified.
    Values are immutable and safe to share across threads.
    """

    coeffs: tuple[complex, ...]
    sup_norm_bound: float | None = None
    bound_is_estimate: bool = False

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        if self.sup_norm_bound is not None:
            bound = float(self.sup_norm_bound)
            if not math.isfinite(bound) or bound < 0.0:
                raise ValueError("sup_norm_bound must be finite and non-negative")
            object.__setattr__(self, "sup_norm_bound", bound)
            slack = _CAUCHY_SLACK * max(1.0, bound)
            for n, c in enumerate(coeffs):
                if abs(c) > bound + slack:
                    raise ValueError(
                        f"coefficient a_{n} has modulus {abs(c)!r}, violating the "
                        f"Cauchy estimate |a_n| <= {bound!r}"
                    )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def moduli(self) -> tuple[float, ...]:
        return tuple(abs_values(self.coeffs))

    def is_constant(self, tol: float = 1e-14) -> bool:
        return all(m <= tol for m in self.moduli[1:])


def series_add(
    f: TruncatedSeries,
    g: TruncatedSeries,
    alpha: complex = 1.0,
    beta: complex = 1.0,
) -> TruncatedSeries:
    """Linear combination alpha*f + beta*g, truncated to the shorter order.

    The shorter order wins so that no unknown high-order coefficients are
    fabricated.  The combined bound |alpha|*C_f + |beta|*C_g is kept only
    when both inputs carry bounds.
    """
    n = min(f.order, g.order)
    alpha = complex(alpha)
    beta = complex(beta)
    coeffs = tuple(alpha * a + beta * b for a, b in zip(f.coeffs, g.coeffs))[: n + 1]
    bound = None
    estimate = False
    if f.sup_norm_bound is not None and g.sup_norm_bound is not None:
        bound = abs(alpha) * f.sup_norm_bound + abs(beta) * g.sup_norm_bound
        estimate = f.bound_is_estimate or g.bound_is_estimate
    return TruncatedSeries(coeffs, bound, estimate)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product c_n = sum_k a_k b_(n-k), truncated to the shorter order."""
    n = min(f.order, g.order)
    coeffs = tuple(cauchy_product(f.coeffs, g.coeffs, n))
    bound = None
    estimate = False
    if f.sup_norm_bound is not None and g.sup_norm_bound is not None:
        bound = f.sup_norm_bound * g.sup_norm_bound
        estimate = f.bound_is_estimate or g.bound_is_estimate
    return TruncatedSeries(coeffs, bound, estimate)


@dataclass(frozen=True)
class BoundaryExtraction:
    """Result of DFT coefficient extraction from boundary samples.

    ``aliasing`` holds the per-coefficient heuristic bound on a-hat_n - a_n =
    sum_(j>=1) a_(n+jM), namely K * rho^(n+M) / (1 - rho^M), valid in the
    model |a_m| <= K * rho^m.  It is None when no decay radius was supplied,
    and it can be exceeded for products with tightly clustered zeros (the
    residues blow up); doubling M is the practical stability check.
    """

    series: TruncatedSeries
    sup_norm_estimate: float
    aliasing: tuple[float, ...] | None


Sampler = Union[Callable[[complex], complex], Sequence[complex]]


def coefficients_from_boundary(
    sampler: Sampler,
    order: int,
    samples: int,
    decay_radius: float | None = None,
) -> BoundaryExtraction:
    """Extract a_0..a_order from values of f on the unit circle.

    a-hat_n = (1/M) * sum_j f(e^(2*pi*i*j/M)) * e^(-2*pi*i*n*j/M), the
    M-point trapezoid rule for the coefficient integral
    (1/2*pi) * integral of f(e^(i*theta)) e^(-i*n*theta) d(theta).

    ``sampler`` is either a deterministic callable z -> f(z) or a sequence of
    the M boundary values in grid order.  Requires M >= 4*(order+1) so the
    grid oversamples the target band.  The max sample modulus is recorded on
    the result series as an *estimated* sup-norm bound, never a certified one.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    m = int(samples)
    if m < 4 * (order + 1):
        raise ValueError(
            f"sample count {m} is too small: need at least 4*(order+1) = {4 * (order + 1)}"
        )
    if callable(sampler):
        values = [complex(sampler(z)) for z in circle_nodes(m)]
    else:
        values = [complex(v) for v in sampler]
        if len(values) != m:
            raise ValueError(f"expected {m} samples, got {len(values)}")

    coeffs = dft_coefficients(values, order + 1)
    peak = max(abs_values(values)) if values else 0.0

    aliasing = None
    if decay_radius is not None:
        rho = float(decay_radius)
        if not 0.0 <= rho < 1.0:
            raise ValueError("decay_radius must lie in [0, 1)")
        denom = 1.0 - rho**m
        aliasing = tuple(peak * rho ** (n + m) / denom for n in range(order + 1))

    series = TruncatedSeries(tuple(coeffs), peak, bound_is_estimate=True)
    return BoundaryExtraction(series, peak, aliasing)


@dataclass(frozen=True)
class SupNormBound:
    """Certified upper bound for the sup norm of an exact polynomial.

    ``coefficient_sum`` is sum |a_n|; ``grid_bound`` is the Bernstein-refined
    circle-grid bound max_j |p(xi_j)| / (1 - pi*N^2/K); ``value`` is their
    minimum.  ``grid_max`` (the raw grid maximum) is also a certified *lower*
    bound for the norm.
    """

    coefficient_sum: float
    grid_bound: float
    grid_max: float
    grid_points: int

    @property
    def value(self) -> float:
        return min(self.coefficient_sum, self.grid_bound)


def sup_norm_upper_bound(
    f: TruncatedSeries, grid_points: int | None = None
) -> SupNormBound:
    """Certified ||f||_inf upper bound, treating f as an exact polynomial.

    Two routes, both certified for polynomials of degree N:
    sum |a_n| always dominates the sup norm, and on a K-point circle grid the
    Bernstein inequality ||p'||_inf <= N ||p||_inf limits how much p can grow
    between grid points, giving ||p||_inf <= max_j |p(xi_j)| / (1 - pi*N^2/K)
    for K > pi*N^2.  The caller owns the polynomial assumption: any true tail
    beyond order N is not accounted for.
    """
    n = f.order
    if grid_points is None:
        grid_points = 8 * n * n + 64
    k = int(grid_points)
    if k <= math.pi * n * n:
        raise ValueError(f"grid_points must exceed pi*N^2 = {math.pi * n * n:.1f}")
    coefficient_sum = math.fsum(f.moduli)
    grid_max = max_abs_on_circle(f.coeffs, k)
    grid_bound = grid_max / (1.0 - math.pi * n * n / k)
    return SupNormBound(coefficient_sum, grid_bound, grid_max, k)


def default_truncation_order(
    r: float, sup_norm_bound: float = 1.0, tail_target: float = 1e-12
) -> int:
    """Smallest N with C * r^N / (1 - r) < tail_target.

    This keeps the enclosure width negligible relative to the assertion
    tolerances used downstream; at r = 1/3 and C = 1 it yields N = 26.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    if tail_target <= 0.0:
        raise ValueError("tail_target must be positive")
    c = float(sup_norm_bound)
    if c < 0.0:
        raise ValueError("sup_norm_bound must be non-negative")
    if r == 0.0 or c == 0.0 or c / (1.0 - r) < tail_target:
        return 0

    def tail(n: int) -> float:
        return c * r**n / (1.0 - r)

    n = max(0, math.ceil(math.log(tail_target * (1.0 - r) / c) / math.log(r)))
    while tail(n) >= tail_target:
        n += 1
    while n > 0 and tail(n - 1) < tail_target:
        n -= 1
    return n
