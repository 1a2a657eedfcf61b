"""Noiseless LTI multipath channel with Rician-faded taps."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import i0e

from .errors import InvalidArgumentError
from .signal_core import ComplexSequence, as_complex, linear_convolve

RNG_ALGORITHM = "PCG64"


def make_rng(seed: int) -> np.random.Generator:
    """Portable, seeded generator; the only randomness source in the package."""
    return np.random.Generator(np.random.PCG64(int(seed)))


@dataclass(frozen=True)
class RicianSpec:
    """Tap statistics and delay layout.

    Each tap gain is ``(s + sigma (g1 + j g2)) exp(j theta)`` with ``g1, g2``
    standard normal and ``theta`` uniform, so ``|gain|`` is Rician(s, sigma)
    and the phase is uniform. ``nlos_rayleigh`` sets ``s = 0`` for every tap
    after the first.
    """

    s: float = 1.0
    sigma: float = 1.0
    L: int = 1
    tau0: float = 0.0
    spacing: float = 1.0
    nlos_rayleigh: bool = False
    normalize: bool = False

    def __post_init__(self):
        if not self.s >= 0:
            raise InvalidArgumentError("s must be >= 0")
        if not self.sigma > 0:
            raise InvalidArgumentError("sigma must be > 0")
        if int(self.L) != self.L or self.L < 1:
            raise InvalidArgumentError("L must be an integer >= 1")
        if not self.spacing > 0:
            raise InvalidArgumentError("spacing must be > 0")
        object.__setattr__(self, "L", int(self.L))

    def los_amplitudes(self) -> np.ndarray:
        s = np.full(self.L, float(self.s))
        if self.nlos_rayleigh:
            s[1:] = 0.0
        return s


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """Tap gains and strictly increasing delays of one channel draw."""

    gains: np.ndarray
    delays: np.ndarray

    def __post_init__(self):
        g = as_complex(self.gains, "gains")
        d = np.asarray(self.delays, dtype=float).ravel()
        if d.size != g.size:
            raise InvalidArgumentError("gains and delays differ in length")
        if np.any(np.diff(d) <= 0):
            raise InvalidArgumentError("tap delays must be strictly increasing")
        g.setflags(write=False)
        d = d.copy()
        d.setflags(write=False)
        object.__setattr__(self, "gains", g)
        object.__setattr__(self, "delays", d)

    def __eq__(self, other):
        if not isinstance(other, ChannelRealization):
            return NotImplemented
        return np.array_equal(self.gains, other.gains) and np.array_equal(self.delays, other.delays)

    __hash__ = None

    @property
    def L(self) -> int:
        return self.gains.size

    def tap_vector(self, Ts: float) -> np.ndarray:
        """Discrete impulse response on a ``Ts`` grid starting at the first tap.

        The sampling clock is aligned with the earliest (line-of-sight) arrival.
        """
        pos = (self.delays - self.delays[0]) / Ts
        idx = np.rint(pos).astype(np.int64)
        _check_aligned(pos, idx, self.delays, "Ts")
        h = np.zeros(idx[-1] + 1, dtype=np.complex128)
        np.add.at(h, idx, self.gains)
        return h

    def to_dict(self) -> dict:
        return {
            "taps": [
                {"re": float(g.real), "im": float(g.imag), "delay_s": float(d)}
                for g, d in zip(self.gains, self.delays)
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChannelRealization":
        try:
            taps = data["taps"]
            gains = [complex(float(t["re"]), float(t["im"])) for t in taps]
            delays = [float(t["delay_s"]) for t in taps]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"malformed channel JSON: {exc}") from None
        return cls(gains, delays)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ChannelRealization":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_taps(cls, h, Ts: float, tau0: float = 0.0) -> "ChannelRealization":
        """Uniformly spaced taps ``h[l]`` at ``tau0 + l Ts``."""
        h = as_complex(h, "h")
        return cls(h, tau0 + np.arange(h.size) * Ts)


def _check_aligned(pos, idx, delays, grid_name):
    bad = np.flatnonzero(np.abs(pos - idx) > 1e-9 * np.maximum(1.0, np.abs(pos)))
    if bad.size:
        l = int(bad[0])
        raise InvalidArgumentError(
            f"tap delay tau_{l} = {delays[l]!r} s is not an integer multiple of {grid_name}"
        )


def rice_pdf(r, spec: RicianSpec):
    """Rice density ``(r/sigma^2) exp(-(r^2+s^2)/(2 sigma^2)) I0(r s / sigma^2)``.

    Evaluated with the exponentially scaled Bessel function so large ``r s``
    does not overflow.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise InvalidArgumentError("r must be >= 0")
    s, var = float(spec.s), float(spec.sigma) ** 2
    # exp(-(r^2+s^2)/2v) I0(rs/v) = exp(-(r-s)^2/2v) i0e(rs/v)
    out = (r_arr / var) * np.exp(-((r_arr - s) ** 2) / (2 * var)) * i0e(r_arr * s / var)
    return out if out.ndim else float(out)


def sample_gains(rng: np.random.Generator, spec: RicianSpec, size=None) -> np.ndarray:
    """Draw Rician tap gains; ``size`` defaults to ``spec.L``."""
    shape = spec.L if size is None else size
    s = spec.los_amplitudes() if size is None else float(spec.s)
    g = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    theta = rng.uniform(0.0, 2 * math.pi, shape)
    return (s + spec.sigma * g) * np.exp(1j * theta)


def sample_channel(seed: int, spec: RicianSpec) -> ChannelRealization:
    """Deterministic channel draw for ``seed``; delays ``tau0 + l * spacing``."""
    gains = sample_gains(make_rng(seed), spec)
    if spec.normalize:
        gains = gains / np.sqrt(np.sum(np.abs(gains) ** 2))
    delays = spec.tau0 + np.arange(spec.L) * spec.spacing
    return ChannelRealization(gains, delays)


def apply_discrete(x, h, full: bool = False) -> np.ndarray:
    """``y[n] = sum_l h[l] x[n-l]`` over a stream that starts silent.

    Returns ``len(x)`` samples; ``full=True`` also keeps the ``L-1``-sample tail.
    """
    x = as_complex(x, "x")
    y = linear_convolve(x, as_complex(h, "h"))
    return y if full else y[: x.size]


def apply_continuous(x: ComplexSequence, realization: ChannelRealization) -> ComplexSequence:
    """Sum of gain-weighted copies of ``x`` delayed by each ``tau_l``.

    Delays must be integer multiples of ``x.dt``. The output keeps ``x.t0`` and
    extends to cover the last delayed sample.
    """
    pos = realization.delays / x.dt
    idx = np.rint(pos).astype(np.int64)
    _check_aligned(pos, idx, realization.delays, "x.dt")
    if np.any(idx < 0):
        raise InvalidArgumentError("tap delays must be >= 0")
    out = np.zeros(len(x) + int(idx[-1]), dtype=np.complex128)
    for g, k in zip(realization.gains, idx):
        out[k : k + len(x)] += g * x.samples
    return ComplexSequence(out, x.dt, x.t0)
