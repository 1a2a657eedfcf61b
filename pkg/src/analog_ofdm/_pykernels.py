"""Pure-numpy implementations of the inner loops.

Same signatures and semantics as the compiled ``_ckernels`` module, used when
the extension is unavailable or ``ANALOG_OFDM_BACKEND=python`` is set.
"""

import numpy as np


def dft_direct(x, sign):
    """Direct O(N^2) transform ``out[i] = sum_n x[n] exp(sign*2j*pi*i*n/N)``."""
    n_len = x.shape[0]
    idx = np.arange(n_len)
    # reduce i*n mod N before forming the angle so large products keep precision
    phase = np.outer(idx, idx) % n_len
    twiddle = np.exp(sign * 2j * np.pi * np.arange(n_len) / n_len)
    return twiddle[phase] @ x


def linear_convolve(a, b):
    return np.convolve(a, b)


def circular_convolve(a, b):
    n_len = a.shape[0]
    out = np.zeros(n_len, dtype=np.complex128)
    for l, bl in enumerate(b):
        out += bl * np.roll(a, l)
    return out


def chirp_sum(weights, t_in, t_out, phi1, phi2):
    """``out[j] = sum_k weights[k] * exp(1j*(phi1 + t_out[j])*t_in[k]/phi2)``."""
    rate = (phi1 + np.asarray(t_out)) / phi2
    return np.exp(1j * np.outer(rate, t_in)) @ weights
