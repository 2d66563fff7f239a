"""Pure-Python kernels.

Same contract as the compiled module ``bohrineq._kernels._core``; selected at
import time when the extension is unavailable or BOHRINEQ_PURE_PYTHON=1.
Results agree with the compiled kernels to within a few ulp (complex division
and ``hypot`` may round differently).
"""

import math
from functools import lru_cache

_TAU = 2.0 * math.pi


@lru_cache(maxsize=64)
def _roots_cached(m):
    return tuple(
        complex(math.cos(_TAU * k / m), math.sin(_TAU * k / m)) for k in range(m)
    )


def circle_nodes(m):
    """The m-point uniform grid e^(2*pi*i*j/m), j = 0..m-1."""
    if m < 1:
        raise ValueError("m must be positive")
    return list(_roots_cached(m))


def cauchy_product(a, b, n_out):
    """c_k = sum_i a[i] * b[k-i] for k = 0..n_out; entries beyond len() are 0."""
    la, lb = len(a), len(b)
    out = []
    for k in range(n_out + 1):
        i_lo = k - lb + 1 if k >= lb else 0
        i_hi = k if k < la else la - 1
        s = 0j
        for i in range(i_lo, i_hi + 1):
            s += a[i] * b[k - i]
        out.append(s)
    return out


def abs_values(a):
    return [abs(x) for x in a]


def power_sum(moduli, r):
    """Horner evaluation of sum_n moduli[n] * r^n (all terms non-negative)."""
    s = 0.0
    for m in reversed(moduli):
        s = s * r + m
    return s


def dft_coefficients(samples, n_coeffs):
    """a_n = (1/M) * sum_j samples[j] * e^(-2*pi*i*n*j/M) for n = 0..n_coeffs-1.

    Kahan-compensated sums keep the result exact to ~1e-15 on polynomial
    sample data, well inside the 1e-12 tolerance promised upstream.
    """
    m = len(samples)
    if n_coeffs > m:
        raise ValueError("cannot extract more coefficients than samples")
    roots = _roots_cached(m)
    conj_roots = tuple(z.conjugate() for z in roots)
    out = []
    for n in range(n_coeffs):
        s = 0j
        c = 0j
        idx = 0
        for j in range(m):
            term = samples[j] * conj_roots[idx]
            y = term - c
            t = s + y
            c = (t - s) - y
            s = t
            idx += n
            if idx >= m:
                idx -= m
        out.append(s / m)
    return out


def max_abs_on_circle(coeffs, k_points):
    """max_j |p(e^(2*pi*i*j/K))| over the K-point uniform grid (Horner)."""
    if k_points < 1:
        raise ValueError("k_points must be positive")
    n = len(coeffs)
    best = 0.0
    for j in range(k_points):
        th = _TAU * j / k_points
        z = complex(math.cos(th), math.sin(th))
        acc = coeffs[n - 1]
        for i in range(n - 2, -1, -1):
            acc = acc * z + coeffs[i]
        v = math.hypot(acc.real, acc.imag)
        if v > best:
            best = v
    return best


def blaschke_circle_samples(zeros, front, m_points):
    """front * prod_k (z - z_k)/(1 - conj(z_k)*z) at z = e^(2*pi*i*j/M)."""
    if m_points < 1:
        raise ValueError("m_points must be positive")
    roots = _roots_cached(m_points)
    conj_zeros = [z.conjugate() for z in zeros]
    out = []
    for z in roots:
        w = front
        for a, ac in zip(zeros, conj_zeros):
            w = w * (z - a) / (1.0 - ac * z)
        out.append(w)
    return out
