"""Linear-chirp phaser model and the QPM-corrected physical RTFT chain.

Transform convention: ``h(t) = integral H(w) exp(j w t) dw`` (no ``1/2pi``),
so ``H(w) = (1/2pi) integral h(t) exp(-j w t) dt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, ResolutionError
from .rtft import RtftMapping, output_window
from .signal_core import ComplexSequence, linear_convolve

MAX_PHASE_STEP = np.pi / 4


@dataclass(frozen=True)
class PhaserParams:
    """All-pass phaser with phase ``phi0 + phi1 (w-wc) + phi2/2 (w-wc)^2``."""

    phi0: float = 0.0
    phi1: float = 0.0
    phi2: float = 0.0
    omega_c: float = 0.0

    def __post_init__(self):
        if self.omega_c < 0:
            raise InvalidArgumentError("omega_c must be >= 0")

    @property
    def mapping(self) -> RtftMapping:
        return RtftMapping(self.phi1, self.phi2)


@dataclass(frozen=True)
class QpmParams:
    """Chirp rates [1/s^2] of the modulators before and after the phaser."""

    phi_L1: float = 0.0
    phi_L2: float = 0.0

    @classmethod
    def matched(cls, phi2: float) -> "QpmParams":
        """Rates ``1/phi2`` that cancel the phaser's quadratic phase."""
        return cls(1.0 / phi2, 1.0 / phi2)

    @classmethod
    def disabled(cls) -> "QpmParams":
        return cls(0.0, 0.0)


def transfer_function(omega, params: PhaserParams):
    w = np.asarray(omega, dtype=float) - params.omega_c
    return np.exp(1j * (params.phi0 + params.phi1 * w + 0.5 * params.phi2 * w * w))


def group_delay(omega, params: PhaserParams):
    """``-d(arg H)/d omega``: affine in frequency."""
    return -params.phi1 - params.phi2 * (np.asarray(omega, dtype=float) - params.omega_c)


def delay_swing(phi2: float, bandwidth_hz: float) -> float:
    """Group-delay swing across ``bandwidth_hz``: ``|phi2| * 2 pi * df``."""
    return abs(phi2) * 2 * np.pi * bandwidth_hz


def _require_dispersion(params: PhaserParams):
    if params.phi2 == 0:
        raise InvalidArgumentError("phi2 must be nonzero for a dispersive phaser")


def gamma(params: PhaserParams) -> complex:
    """Complex amplitude of the impulse response, from the Fresnel integral."""
    _require_dispersion(params)
    p1, p2 = params.phi1, params.phi2
    phase = params.phi0 + math.copysign(np.pi / 4, p2) - p1 * p1 / (2 * p2)
    return math.sqrt(2 * np.pi / abs(p2)) * complex(np.exp(1j * phase))


def gamma_as_printed(params: PhaserParams) -> complex:
    """The published closed form of the amplitude constant (magnitude uses ``|phi2|``).

    Its phase differs from :func:`gamma`; kept for reference only.
    """
    _require_dispersion(params)
    p0, p1, p2, wc = params.phi0, params.phi1, params.phi2, params.omega_c
    phase = np.pi / 4 + p0 + p1 * wc - p1 * p1 / p2 + p2 * wc * wc / 2 - p2 * wc * wc
    return math.sqrt(2 * np.pi / abs(p2)) * complex(np.exp(1j * phase))


def _chirp_phase(t, params: PhaserParams):
    p1, p2, wc = params.phi1, params.phi2, params.omega_c
    return (wc - p1 / p2) * t - t * t / (2 * p2)


def impulse_response(t_grid, params: PhaserParams) -> ComplexSequence:
    """Sample ``h(t) = gamma exp(j[(wc - phi1/phi2) t - t^2/(2 phi2)])``."""
    _require_dispersion(params)
    t = np.asarray(t_grid, dtype=float).ravel()
    if t.size == 0:
        raise InvalidArgumentError("t_grid must be non-empty")
    values = gamma(params) * np.exp(1j * _chirp_phase(t, params))
    dt = t[1] - t[0] if t.size > 1 else 1.0
    return ComplexSequence(values, dt, t[0])


def far_field_ratio(T_in: float, phi2: float) -> float:
    """``T_in^2 / (2 pi |phi2|)``; the plain phaser is a Fourier transformer when this is << 1."""
    if phi2 == 0:
        raise InvalidArgumentError("phi2 must be nonzero")
    if not T_in > 0:
        raise InvalidArgumentError("T_in must be > 0")
    return T_in * T_in / (2 * np.pi * abs(phi2))


def qpm_modulate(signal: ComplexSequence, chirp_rate: float) -> ComplexSequence:
    """Multiply by ``exp(j chirp_rate t^2 / 2)`` at each sample's absolute time."""
    if chirp_rate == 0:
        return signal
    t = signal.times
    return ComplexSequence(signal.samples * np.exp(0.5j * chirp_rate * t * t), signal.dt, signal.t0)


def _lattice_indices(times, t0, dt):
    pos = (np.asarray(times, dtype=float) - t0) / dt
    idx = np.rint(pos)
    if np.any(np.abs(pos - idx) > 1e-6):
        raise InvalidArgumentError(
            "requested output times are not on the simulation lattice t0 + j*dt; "
            "choose an oversampling that places them on it"
        )
    return idx.astype(np.int64)


def _check_resolution(params, qpm, dt, t_in, lag_lo, lag_hi, t_out):
    p1, p2, wc = params.phi1, params.phi2, params.omega_c
    h_rate = max(abs(wc - (p1 + lag_lo) / p2), abs(wc - (p1 + lag_hi) / p2))
    q1_rate = abs(qpm.phi_L1) * max(abs(t_in[0]), abs(t_in[-1]))
    q2_rate = abs(qpm.phi_L2) * max(abs(t_out[0]), abs(t_out[-1]))
    worst = max(h_rate, q1_rate, q2_rate)
    if worst * dt >= MAX_PHASE_STEP:
        need = MAX_PHASE_STEP / worst
        raise ResolutionError(
            f"chirp phase advances {worst * dt:.3g} rad per sample (limit pi/4); "
            f"need dt < {need:.6g} s, have {dt:.6g} s"
        )


def rtft_physical_chain(
    signal: ComplexSequence,
    params: PhaserParams,
    qpm: QpmParams,
    oversampling: int = 1,
    t_out=None,
    detector: str = "coherent",
) -> ComplexSequence:
    """Simulate mixer, QPM1, phaser, QPM2 and detector on a sampled input.

    Each input sample is an impulse of area ``value * signal.dt``. The input is
    zero-stuffed by ``oversampling`` to form the simulation lattice
    (``dt = signal.dt / oversampling``); the phaser acts as a Riemann-sum
    convolution with ``h`` sampled on that lattice.

    ``t_out`` selects output instants (must lie on the lattice); by default
    the output covers the mapping's output window for Nyquist interval
    ``signal.dt``. The ``coherent`` detector strips the deterministic outer
    phase (carrier, linear term, residual outer chirp and ``arg gamma``) so
    complex symbol values survive; ``magnitude`` returns the envelope.
    """
    _require_dispersion(params)
    if int(oversampling) != oversampling or oversampling < 1:
        raise InvalidArgumentError("oversampling must be an integer >= 1")
    if detector not in ("coherent", "magnitude"):
        raise InvalidArgumentError(f"unknown detector {detector!r}")
    if len(signal) == 0:
        raise InvalidArgumentError("input signal is empty")
    os_ = int(oversampling)
    dt = signal.dt / os_
    K = len(signal) * os_
    stuffed = np.zeros(K, dtype=np.complex128)
    stuffed[::os_] = signal.samples * os_
    t_in = signal.t0 + np.arange(K) * dt

    if t_out is None:
        lo, hi = output_window(params.mapping, signal.dt)
        j0 = int(math.ceil((lo - signal.t0) / dt - 1e-9))
        j1 = int(math.floor((hi - signal.t0) / dt + 1e-9))
        out_idx = np.arange(j0, j1 + 1)
    else:
        out_idx = _lattice_indices(np.atleast_1d(t_out), signal.t0, dt)
    j0, j1 = int(out_idx.min()), int(out_idx.max())
    t_span = signal.t0 + np.array([j0, j1]) * dt

    # h is needed at lags (j - k) * dt for j in [j0, j1], k in [0, K)
    m_lo = j0 - (K - 1)
    lags = (m_lo + np.arange(j1 - m_lo + 1)) * dt
    _check_resolution(params, qpm, dt, t_in, lags[0], lags[-1], t_span)

    u = stuffed * np.exp(1j * params.omega_c * t_in)
    if qpm.phi_L1:
        u = u * np.exp(0.5j * qpm.phi_L1 * t_in * t_in)
    h = impulse_response(lags, params).samples
    full = linear_convolve(u, h) * dt
    # full[p] pairs with output lattice index m_lo + p
    dense = full[K - 1 : K - 1 + (j1 - j0 + 1)]
    t_dense = signal.t0 + np.arange(j0, j1 + 1) * dt
    if qpm.phi_L2:
        dense = dense * np.exp(0.5j * qpm.phi_L2 * t_dense * t_dense)

    picked = dense[out_idx - j0]
    t_picked = signal.t0 + out_idx * dt
    if detector == "magnitude":
        values = np.abs(picked).astype(np.complex128)
    else:
        p1, p2, wc = params.phi1, params.phi2, params.omega_c
        outer = (wc - p1 / p2) * t_picked + 0.5 * (qpm.phi_L2 - 1.0 / p2) * t_picked**2
        g = gamma(params)
        values = picked * np.exp(-1j * (outer + np.angle(g)))
    out_dt = dt if t_out is None else (t_picked[1] - t_picked[0] if t_picked.size > 1 else dt)
    return ComplexSequence(values, out_dt, t_picked[0])
