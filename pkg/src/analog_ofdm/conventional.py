"""Conventional (IDFT/DFT) OFDM: continuous rendering, spectrum, discrete modem."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .signal_core import ComplexSequence, SymbolBlock, as_complex, dft, idft

DEFAULT_OVERSAMPLING = 16


@dataclass(frozen=True)
class SubcarrierSpec:
    """Subcarrier ``n`` of an ``N``-carrier block lasting ``T0`` seconds."""

    n: int
    N: int
    T0: float
    amplitude: float | None = None

    def __post_init__(self):
        if not 0 <= self.n < self.N:
            raise InvalidArgumentError(f"subcarrier index {self.n} outside [0, {self.N})")
        if self.amplitude is None:
            object.__setattr__(self, "amplitude", 1.0 / np.sqrt(self.N))
        if not self.amplitude > 0:
            raise InvalidArgumentError("subcarrier amplitude must be > 0")

    @property
    def frequency(self) -> float:
        return self.n / self.T0

    def __call__(self, t):
        """``A_n exp(j 2 pi f_n t)``, without window."""
        return self.amplitude * np.exp(2j * np.pi * self.frequency * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class WindowSpec:
    """Rectangular window of ``width`` seconds centred on ``center``; half-open."""

    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise InvalidArgumentError("window width must be > 0")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        lo = self.center - self.width / 2
        return ((t >= lo) & (t < lo + self.width)).astype(float)


def block_window(block: SymbolBlock) -> WindowSpec:
    return WindowSpec(center=block.T0 / 2, width=block.T0)


def subcarrier_waveform(block: SymbolBlock, n: int, t) -> np.ndarray:
    """One windowed, symbol-weighted subcarrier term ``X[n] w(t) phi_n(t)``."""
    sub = SubcarrierSpec(n, block.N, block.T0)
    return block.symbols[n] * block_window(block)(t) * sub(t)


def evaluate_continuous(block: SymbolBlock, t) -> np.ndarray:
    """Evaluate the windowed OFDM waveform at arbitrary times ``t``."""
    t = np.asarray(t, dtype=float)
    n = np.arange(block.N)
    carriers = np.exp(2j * np.pi * np.outer(t, n) / block.T0)
    return block_window(block)(t) * (carriers @ block.symbols) / np.sqrt(block.N)


def modulate_continuous(block: SymbolBlock, oversampling: int = DEFAULT_OVERSAMPLING) -> ComplexSequence:
    """Render ``x(t)`` on ``[0, T0)`` with ``dt = Ts / oversampling``."""
    if int(oversampling) != oversampling or oversampling < 1:
        raise InvalidArgumentError(f"oversampling must be an integer >= 1, got {oversampling!r}")
    oversampling = int(oversampling)
    dt = block.symbol_period / oversampling
    t = np.arange(block.N * oversampling) * dt
    return ComplexSequence(evaluate_continuous(block, t), dt, 0.0)


def spectrum(block: SymbolBlock, freq_grid) -> np.ndarray:
    """Fourier transform of the windowed block: a weighted sum of sincs.

    Each term carries the window-centre phase ``exp(-j pi (f - f_n) T0)``.
    """
    f = np.asarray(freq_grid, dtype=float)
    T0 = block.T0
    fn = np.arange(block.N) / T0
    u = np.subtract.outer(f, fn) * T0
    terms = np.exp(-1j * np.pi * u) * np.sinc(u)
    return (T0 / np.sqrt(block.N)) * (terms @ block.symbols)


def modulate_discrete(symbols) -> np.ndarray:
    """``x[k] = N**-0.5 * sum_n X[n] exp(j 2 pi k n / N)``."""
    X = symbols.symbols if isinstance(symbols, SymbolBlock) else as_complex(symbols, "symbols")
    return np.sqrt(X.size) * idft(X)


def demodulate_discrete(samples) -> np.ndarray:
    """Inverse of :func:`modulate_discrete` (unitary DFT)."""
    x = as_complex(samples, "samples")
    return dft(x) / np.sqrt(x.size)
