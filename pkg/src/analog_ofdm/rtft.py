"""Ideal real-time Fourier transform of impulse-train inputs.

A dispersive element with group delay ``phi1`` and dispersion ``phi2`` maps
input frequency onto output time, ``omega(t) = -(phi1 + t) / phi2``. For an
input made of Dirac impulses the transform integral collapses to a finite
sum, which is what everything here evaluates (no quadrature).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidArgumentError
from .signal_core import ComplexSequence, SymbolBlock, as_complex


@dataclass(frozen=True)
class RtftMapping:
    """Time-frequency map set by group delay ``phi1`` [s] and dispersion ``phi2`` [s^2/rad]."""

    phi1: float
    phi2: float

    def __post_init__(self):
        if self.phi2 == 0 or not np.isfinite(self.phi2):
            raise InvalidArgumentError("phi2 must be finite and nonzero")

    @property
    def gain(self) -> float:
        return float(np.sqrt(2 * np.pi / abs(self.phi2)))


def instantaneous_frequency(t_out, mapping: RtftMapping):
    """Input angular frequency [rad/s] that lands at output time ``t_out``."""
    return -(mapping.phi1 + np.asarray(t_out, dtype=float)) / mapping.phi2


def output_window(mapping: RtftMapping, Ts: float) -> tuple[float, float]:
    """Output interval onto which the Nyquist band ``[-pi/Ts, pi/Ts]`` is mapped."""
    if not Ts > 0:
        raise InvalidArgumentError("Ts must be > 0")
    half = np.pi / Ts * mapping.phi2
    if mapping.phi2 >= 0:
        return (-half - mapping.phi1, half - mapping.phi1)
    return (half - mapping.phi1, -half - mapping.phi1)


def _chirp_sum(weights, t_in, t_out, mapping):
    t_out = np.ascontiguousarray(np.asarray(t_out, dtype=float).ravel())
    t_in = np.ascontiguousarray(np.asarray(t_in, dtype=float).ravel())
    return kernels.chirp_sum(weights, t_in, t_out, float(mapping.phi1), float(mapping.phi2))


def rtft_impulse_train(block: SymbolBlock, mapping: RtftMapping, out_grid) -> ComplexSequence:
    """RTFT of ``sum_n X[n] delta(t - n Ts)`` evaluated on ``out_grid``.

    ``out_grid`` must be uniformly spaced (or a single point); the result is
    returned as a :class:`ComplexSequence` on that grid.
    """
    grid = np.asarray(out_grid, dtype=float).ravel()
    if grid.size == 0:
        raise InvalidArgumentError("out_grid must be non-empty")
    t_in = np.arange(block.N) * block.symbol_period
    values = mapping.gain * _chirp_sum(block.symbols, t_in, grid, mapping)
    dt = grid[1] - grid[0] if grid.size > 1 else block.symbol_period
    if grid.size > 2 and not np.allclose(np.diff(grid), dt, rtol=1e-9, atol=0):
        raise InvalidArgumentError("out_grid must be uniformly spaced")
    return ComplexSequence(values, dt, grid[0])


def rtft_sequence(seq: ComplexSequence, mapping: RtftMapping, t_out) -> np.ndarray:
    """RTFT of a sampled input, each sample an impulse of area ``value * dt``."""
    return mapping.gain * seq.dt * _chirp_sum(seq.samples, seq.times, t_out, mapping)


def rtft_ofdm_discrete(block) -> np.ndarray:
    """Closed-form sampled RTFT-OFDM block, ``(2 pi / sqrt N) sum X[n] e^{j2pi kn/N} e^{j n pi}``.

    Equals ``2*pi`` times the IDFT-OFDM block rotated by ``N/2`` for even N.
    """
    X = block.symbols if isinstance(block, SymbolBlock) else as_complex(block, "symbols")
    N = X.size
    n = np.arange(N)
    alt = np.where(n % 2 == 0, 1.0, -1.0)
    # (k*n) mod N keeps the angle exact for large index products
    phase = np.outer(n, n) % N
    kernel = np.exp(2j * np.pi * np.arange(N) / N)[phase]
    return (2 * np.pi / np.sqrt(N)) * (kernel @ (X * alt))


def normalize_peak(x) -> np.ndarray:
    """Scale by the largest magnitude; the comparison normalization."""
    x = as_complex(x)
    peak = np.max(np.abs(x))
    return x / peak if peak > 0 else x


def normalize_components(x) -> np.ndarray:
    """Plot-only normalization: real and imaginary parts scaled by their own maxima.

    Not linear and not phase-preserving. A part whose maximum is not positive
    is scaled by its largest magnitude instead; an all-zero part is left alone.
    """
    x = as_complex(x)

    def scale(part):
        top = part.max()
        if top <= 0:
            top = np.abs(part).max()
        return part / top if top > 0 else part

    return scale(x.real) + 1j * scale(x.imag)
