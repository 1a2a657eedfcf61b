# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

Every function here has a numpy twin in :mod:`analog_ofdm._pykernels` with an
identical signature; :mod:`analog_ofdm._backend` picks one at import time.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI

cnp.import_array()


def dft_direct(const double complex[::1] x, int sign):
    """Direct O(N^2) transform ``out[i] = sum_n x[n] exp(sign*2j*pi*i*n/N)``."""
    cdef Py_ssize_t n_len = x.shape[0]
    cdef Py_ssize_t i, n, idx
    cdef double complex acc
    out = np.empty(n_len, dtype=np.complex128)
    cdef double complex[::1] o = out
    twiddle = np.empty(n_len, dtype=np.complex128)
    cdef double complex[::1] w = twiddle
    cdef double ang
    for n in range(n_len):
        ang = sign * 2.0 * M_PI * n / n_len
        w[n] = cos(ang) + 1j * sin(ang)
    for i in range(n_len):
        acc = 0
        idx = 0
        for n in range(n_len):
            acc = acc + x[n] * w[idx]
            idx = idx + i
            if idx >= n_len:
                idx = idx - n_len
        o[i] = acc
    return out


def linear_convolve(const double complex[::1] a, const double complex[::1] b):
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    cdef Py_ssize_t i, j
    out = np.zeros(na + nb - 1, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double complex ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            o[i + j] = o[i + j] + ai * b[j]
    return out


def circular_convolve(const double complex[::1] a, const double complex[::1] b):
    cdef Py_ssize_t n_len = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    cdef Py_ssize_t n, l, k
    out = np.zeros(n_len, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double complex acc
    for n in range(n_len):
        acc = 0
        for l in range(nb):
            k = n - l
            if k < 0:
                k = k + n_len
            acc = acc + b[l] * a[k]
        o[n] = acc
    return out


def chirp_sum(const double complex[::1] weights, const double[::1] t_in,
              const double[::1] t_out, double phi1, double phi2):
    """``out[j] = sum_k weights[k] * exp(1j*(phi1 + t_out[j])*t_in[k]/phi2)``."""
    cdef Py_ssize_t n_in = weights.shape[0]
    cdef Py_ssize_t n_out = t_out.shape[0]
    cdef Py_ssize_t j, k
    cdef double rate, ang
    cdef double complex acc
    out = np.empty(n_out, dtype=np.complex128)
    cdef double complex[::1] o = out
    for j in range(n_out):
        rate = (phi1 + t_out[j]) / phi2
        acc = 0
        for k in range(n_in):
            ang = rate * t_in[k]
            acc = acc + weights[k] * (cos(ang) + 1j * sin(ang))
        o[j] = acc
    return out
