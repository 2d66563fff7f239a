# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Cauchy products, weighted power sums, DFT coefficient
extraction, and circle-grid evaluation.  Mirrors _fallback.py."""

from libc.math cimport cos, sin, hypot, M_PI
from libc.stdlib cimport malloc, free


cdef double TAU = 2.0 * M_PI


cdef double complex* _to_cbuf(object seq, Py_ssize_t n) except NULL:
    cdef double complex* buf = <double complex*> malloc(n * sizeof(double complex))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            buf[i] = seq[i]
    except Exception:
        free(buf)
        raise
    return buf


def circle_nodes(Py_ssize_t m):
    """The m-point uniform grid e^(2*pi*i*j/m), j = 0..m-1."""
    if m < 1:
        raise ValueError("m must be positive")
    cdef list out = []
    cdef Py_ssize_t j
    cdef double th
    for j in range(m):
        th = TAU * j / m
        out.append(complex(cos(th), sin(th)))
    return out


def cauchy_product(object a, object b, Py_ssize_t n_out):
    """c_k = sum_i a[i] * b[k-i] for k = 0..n_out; entries beyond len() are 0."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef double complex* ab = _to_cbuf(a, la)
    cdef double complex* bb
    try:
        bb = _to_cbuf(b, lb)
    except Exception:
        free(ab)
        raise
    cdef list out = []
    cdef Py_ssize_t k, i, i_lo, i_hi
    cdef double complex s
    try:
        for k in range(n_out + 1):
            i_lo = k - lb + 1 if k >= lb else 0
            i_hi = k if k < la else la - 1
            s = 0
            for i in range(i_lo, i_hi + 1):
                s = s + ab[i] * bb[k - i]
            out.append(s)
    finally:
        free(ab)
        free(bb)
    return out


def abs_values(object a):
    cdef Py_ssize_t n = len(a), i
    cdef double complex v
    cdef list out = []
    for i in range(n):
        v = a[i]
        out.append(hypot(v.real, v.imag))
    return out


def power_sum(object moduli, double r):
    """Horner evaluation of sum_n moduli[n] * r^n (all terms non-negative)."""
    cdef Py_ssize_t n = len(moduli), i
    cdef double* buf = <double*> malloc(n * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef double s = 0.0
    try:
        for i in range(n):
            buf[i] = moduli[i]
        for i in range(n - 1, -1, -1):
            s = s * r + buf[i]
    finally:
        free(buf)
    return s


def dft_coefficients(object samples, Py_ssize_t n_coeffs):
    """a_n = (1/M) * sum_j samples[j] * e^(-2*pi*i*n*j/M) for n = 0..n_coeffs-1.

    Kahan-compensated sums keep the result exact to ~1e-15 on polynomial
    sample data, well inside the 1e-12 tolerance promised upstream.
    """
    cdef Py_ssize_t m = len(samples)
    if n_coeffs > m:
        raise ValueError("cannot extract more coefficients than samples")
    cdef double complex* sb = _to_cbuf(samples, m)
    cdef double complex* table = <double complex*> malloc(m * sizeof(double complex))
    if table == NULL:
        free(sb)
        raise MemoryError()
    cdef list out = []
    cdef Py_ssize_t n, j, idx
    cdef double th
    cdef double complex s, c, y, t, term
    try:
        for j in range(m):
            th = TAU * j / m
            # conj(e^(i*th)): exact sign flip of the same libm sin value
            table[j] = complex(cos(th), -sin(th))
        for n in range(n_coeffs):
            s = 0
            c = 0
            idx = 0
            for j in range(m):
                term = sb[j] * table[idx]
                y = term - c
                t = s + y
                c = (t - s) - y
                s = t
                idx += n
                if idx >= m:
                    idx -= m
            out.append(s / m)
    finally:
        free(sb)
        free(table)
    return out


def max_abs_on_circle(object coeffs, Py_ssize_t k_points):
    """max_j |p(e^(2*pi*i*j/K))| over the K-point uniform grid (Horner)."""
    if k_points < 1:
        raise ValueError("k_points must be positive")
    cdef Py_ssize_t n = len(coeffs)
    cdef double complex* cb = _to_cbuf(coeffs, n)
    cdef double best = 0.0, th, v
    cdef Py_ssize_t j, i
    cdef double complex z, acc
    try:
        for j in range(k_points):
            th = TAU * j / k_points
            z = complex(cos(th), sin(th))
            acc = cb[n - 1]
            for i in range(n - 2, -1, -1):
                acc = acc * z + cb[i]
            v = hypot(acc.real, acc.imag)
            if v > best:
                best = v
    finally:
        free(cb)
    return best


def blaschke_circle_samples(object zeros, object front, Py_ssize_t m_points):
    """front * prod_k (z - z_k)/(1 - conj(z_k)*z) at z = e^(2*pi*i*j/M)."""
    if m_points < 1:
        raise ValueError("m_points must be positive")
    cdef Py_ssize_t nz = len(zeros)
    cdef double complex* zb = _to_cbuf(zeros, nz) if nz else NULL
    cdef double complex fr = front
    cdef list out = []
    cdef Py_ssize_t j, k
    cdef double th
    cdef double complex z, w
    try:
        for j in range(m_points):
            th = TAU * j / m_points
            z = complex(cos(th), sin(th))
            w = fr
            for k in range(nz):
                w = w * (z - zb[k]) / (1.0 - zb[k].conjugate() * z)
            out.append(w)
    finally:
        if zb != NULL:
            free(zb)
    return out
