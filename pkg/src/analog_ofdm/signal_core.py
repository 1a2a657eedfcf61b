"""Complex-sequence value types and the transform/convolution kernels.

All functions accept anything ``np.asarray`` understands and return fresh
``complex128`` arrays. The heavy loops live in the backend selected by
:mod:`analog_ofdm._backend`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import BACKEND, kernels
from .errors import InvalidArgumentError

__all__ = [
    "BACKEND",
    "ComplexSequence",
    "SymbolBlock",
    "as_complex",
    "dft",
    "idft",
    "linear_convolve",
    "circular_convolve",
]


def as_complex(values, name="input", allow_empty=False) -> np.ndarray:
    """Return a contiguous, 1-D ``complex128`` copy of ``values``."""
    arr = np.ascontiguousarray(np.asarray(values, dtype=np.complex128).ravel())
    if arr.size == 0 and not allow_empty:
        raise InvalidArgumentError(f"{name} must be non-empty")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ComplexSequence:
    """Uniformly sampled complex signal; sample ``k`` sits at ``t0 + k*dt``.

    When a sequence feeds a Fourier-type integral, each sample is read as an
    impulse of area ``samples[k] * dt`` (rectangle rule). A DAC impulse train
    with weights ``X[n]`` at spacing ``Ts`` is therefore
    ``ComplexSequence(X / Ts, Ts)``, while ``ComplexSequence(X, Ts)`` carries
    areas ``X[n] * Ts``.
    """

    samples: np.ndarray
    dt: float
    t0: float = 0.0

    def __post_init__(self):
        if not self.dt > 0:
            raise InvalidArgumentError(f"dt must be > 0, got {self.dt!r}")
        object.__setattr__(self, "samples", _frozen(as_complex(self.samples, "samples", allow_empty=True)))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "t0", float(self.t0))

    def __len__(self):
        return self.samples.size

    def __eq__(self, other):
        if not isinstance(other, ComplexSequence):
            return NotImplemented
        return self.dt == other.dt and self.t0 == other.t0 and np.array_equal(self.samples, other.samples)

    __hash__ = None

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.samples.size) * self.dt

    @property
    def duration(self) -> float:
        return self.samples.size * self.dt

    def energy(self) -> float:
        """Rectangle-rule energy ``sum |x|^2 dt``."""
        return float(np.sum(np.abs(self.samples) ** 2) * self.dt)


@dataclass(frozen=True, eq=False)
class SymbolBlock:
    """The ``N`` data symbols of one OFDM block."""

    symbols: np.ndarray
    symbol_period: float
    block_index: int = 0

    def __post_init__(self):
        if not self.symbol_period > 0:
            raise InvalidArgumentError("symbol_period must be > 0")
        if self.block_index < 0:
            raise InvalidArgumentError("block_index must be >= 0")
        object.__setattr__(self, "symbols", _frozen(as_complex(self.symbols, "symbols")))
        object.__setattr__(self, "symbol_period", float(self.symbol_period))

    @property
    def N(self) -> int:
        return self.symbols.size

    @property
    def T0(self) -> float:
        """Block duration ``N * Ts``."""
        return self.symbols.size * self.symbol_period

    def __eq__(self, other):
        if not isinstance(other, SymbolBlock):
            return NotImplemented
        return (
            self.block_index == other.block_index
            and self.symbol_period == other.symbol_period
            and np.array_equal(self.symbols, other.symbols)
        )

    __hash__ = None


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def dft(seq, fast: bool = False) -> np.ndarray:
    """Unnormalized forward DFT, ``out[i] = sum_n x[n] exp(-2j*pi*i*n/N)``.

    ``fast=True`` switches to numpy's FFT for power-of-two lengths; the
    direct sum remains the reference.
    """
    x = as_complex(seq)
    if fast and _is_pow2(x.size):
        return np.fft.fft(x)
    return kernels.dft_direct(x, -1)


def idft(seq, fast: bool = False) -> np.ndarray:
    """Inverse DFT with ``1/N`` normalization, so ``idft(dft(x)) == x``."""
    x = as_complex(seq)
    if fast and _is_pow2(x.size):
        return np.fft.ifft(x)
    return kernels.dft_direct(x, 1) / x.size


def linear_convolve(a, b) -> np.ndarray:
    """Full linear convolution, length ``len(a) + len(b) - 1``."""
    return kernels.linear_convolve(as_complex(a, "a"), as_complex(b, "b"))


def circular_convolve(a, b) -> np.ndarray:
    """N-point circular convolution of ``a`` with ``b`` zero-padded to ``len(a)``."""
    a = as_complex(a, "a")
    b = as_complex(b, "b")
    if b.size > a.size:
        raise InvalidArgumentError(
            f"kernel length {b.size} exceeds sequence length {a.size}"
        )
    return kernels.circular_convolve(a, b)
