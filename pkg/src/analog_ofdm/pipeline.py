"""End-to-end transmit/receive chains, one-tap equalization and ISI metrics.

Stream layout: blocks are prefixed and concatenated back to back at the
symbol rate ``Ts``. For the RTFT systems the payload sample ``k`` of a block is
the transmitter output at ``a + k Ts``, with ``a`` the start of the
transmitter's output window (0 or ``T0/2``); the receiver restores that time
stamp before its own transform, so each block is processed on the same local
clock regardless of its position in the stream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .conventional import demodulate_discrete, modulate_discrete
from .design import OfdmProfile, Phi1Case, Phi2Sign, rx_params, tx_params
from .errors import EqualizationError, InvalidArgumentError
from .phaser import QpmParams, rtft_physical_chain
from .prefix import PrefixKind, add_prefix, remove_prefix
from .rtft import rtft_sequence
from .signal_core import ComplexSequence, SymbolBlock, as_complex, circular_convolve, dft, idft

EQUALIZATION_FLOOR = 1e-12
DEFAULT_PHYSICAL_OVERSAMPLING = 64


class SystemKind(enum.Enum):
    ConventionalFFT = "ConventionalFFT"
    RtftIdeal = "RtftIdeal"
    RtftPhysical = "RtftPhysical"

    @property
    def is_rtft(self) -> bool:
        return self is not SystemKind.ConventionalFFT


@dataclass(frozen=True)
class PrefixSpec:
    kind: PrefixKind = PrefixKind.NONE
    L: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", PrefixKind(self.kind))
        if int(self.L) != self.L or self.L < 0:
            raise InvalidArgumentError("prefix length must be an integer >= 0")
        object.__setattr__(self, "L", int(self.L))
        if self.kind is PrefixKind.NONE and self.L:
            raise InvalidArgumentError("prefix kind NONE requires L = 0")
        if self.kind is not PrefixKind.NONE and self.L == 0:
            object.__setattr__(self, "kind", PrefixKind.NONE)


NO_PREFIX = PrefixSpec()


def qpsk_symbols(rng: np.random.Generator, N: int) -> np.ndarray:
    """Unit-energy QPSK, ``(+-1 +- j)/sqrt(2)``."""
    bits = rng.integers(0, 2, size=(2, N))
    return ((2 * bits[0] - 1) + 1j * (2 * bits[1] - 1)) / np.sqrt(2)


def _check_blocks(blocks):
    blocks = list(blocks)
    if not blocks:
        raise InvalidArgumentError("need at least one block")
    N, Ts = blocks[0].N, blocks[0].symbol_period
    for b in blocks[1:]:
        if b.N != N:
            raise InvalidArgumentError(f"block {b.block_index} has N={b.N}, expected {N}")
        if b.symbol_period != Ts:
            raise InvalidArgumentError(f"block {b.block_index} has a different symbol period")
    return blocks, N, Ts


def _profile_for(profile, N, Ts):
    if profile is None:
        return OfdmProfile(N, Ts)
    if profile.N != N or profile.Ts != Ts:
        raise InvalidArgumentError("profile N/Ts do not match the blocks")
    return profile


def tx_payload(block: SymbolBlock, kind: SystemKind, profile: OfdmProfile | None = None,
               oversampling: int = DEFAULT_PHYSICAL_OVERSAMPLING) -> np.ndarray:
    """The ``N`` symbol-rate samples one block puts on the air, before any prefix."""
    kind = SystemKind(kind)
    if kind is SystemKind.ConventionalFFT:
        return modulate_discrete(block.symbols)
    profile = _profile_for(profile, block.N, block.symbol_period)
    tx = tx_params(profile)
    dac = ComplexSequence(block.symbols, block.symbol_period, 0.0)
    t = profile.tx_window_start + np.arange(block.N) * block.symbol_period
    if kind is SystemKind.RtftIdeal:
        return rtft_sequence(dac, tx.mapping, t)
    out = rtft_physical_chain(dac, tx, QpmParams.matched(tx.phi2), oversampling, t_out=t)
    return out.samples.copy()


def transmit(blocks, kind: SystemKind, prefix: PrefixSpec = NO_PREFIX,
             profile: OfdmProfile | None = None,
             oversampling: int = DEFAULT_PHYSICAL_OVERSAMPLING) -> ComplexSequence:
    """Modulate each block, add its prefix and concatenate into one stream."""
    blocks, N, Ts = _check_blocks(blocks)
    parts = [
        add_prefix(tx_payload(b, kind, profile, oversampling), prefix.L, prefix.kind).samples
        for b in blocks
    ]
    return ComplexSequence(np.concatenate(parts), Ts, 0.0)


def subcarrier_channel_response(h, N: int, kind: SystemKind = SystemKind.ConventionalFFT,
                                phi2_sign: Phi2Sign = Phi2Sign.Plus) -> np.ndarray:
    """Per-subcarrier gain ``H[i]`` seen after prefix removal and the receiver transform.

    The DFT of the zero-padded taps, except for an RTFT receiver with negative
    transmit dispersion, whose transform runs with the opposite kernel sign.
    """
    h = as_complex(h, "h")
    if h.size > N:
        raise InvalidArgumentError(f"channel length {h.size} exceeds N = {N}")
    padded = np.zeros(N, dtype=np.complex128)
    padded[: h.size] = h
    if SystemKind(kind).is_rtft and Phi2Sign(phi2_sign) is Phi2Sign.Minus:
        return N * idft(padded)
    return dft(padded)


def equalize(Y, H, floor: float = EQUALIZATION_FLOOR) -> np.ndarray:
    """One-tap division ``Y[i] / H[i]``; refuses bins with ``|H[i]| < floor``."""
    Y = as_complex(Y, "Y")
    H = as_complex(H, "H")
    bad = np.flatnonzero(np.abs(H) < floor)
    if bad.size:
        raise EqualizationError(bad.tolist(), floor)
    return Y / H


def rx_transform(payload, kind: SystemKind, profile: OfdmProfile,
                 oversampling: int = DEFAULT_PHYSICAL_OVERSAMPLING) -> np.ndarray:
    """Receiver transform of one prefix-free block, before equalization and compensation."""
    kind = SystemKind(kind)
    y = as_complex(payload, "payload")
    if kind is SystemKind.ConventionalFFT:
        return demodulate_discrete(y)
    rx = rx_params(tx_params(profile))
    seq = ComplexSequence(y, profile.Ts, profile.tx_window_start)
    t = np.arange(profile.N) * profile.Ts
    if kind is SystemKind.RtftIdeal:
        out = rtft_sequence(seq, rx.mapping, t)
    else:
        out = rtft_physical_chain(seq, rx, QpmParams.matched(rx.phi2), oversampling, t_out=t).samples
    # tx and rx each contribute 2*pi
    return out / (4 * np.pi**2)


def phase_compensation(N: int, profile: OfdmProfile) -> np.ndarray:
    """``(-1)^n`` for the zero-start placement, ones otherwise."""
    if profile.phi1_case is Phi1Case.ZeroStart:
        return np.where(np.arange(N) % 2 == 0, 1.0, -1.0)
    return np.ones(N)


def evm(recovered, truth) -> float:
    """RMS error magnitude over RMS symbol magnitude."""
    xr = recovered.symbols if isinstance(recovered, SymbolBlock) else as_complex(recovered)
    xt = truth.symbols if isinstance(truth, SymbolBlock) else as_complex(truth)
    if xr.size != xt.size:
        raise InvalidArgumentError("recovered and truth differ in N")
    ref = np.sqrt(np.mean(np.abs(xt) ** 2))
    if ref == 0:
        raise InvalidArgumentError("truth block has zero energy")
    return float(np.sqrt(np.mean(np.abs(xr - xt) ** 2)) / ref)


@dataclass
class RunReport:
    recovered_blocks: list
    per_block_max_abs_error: list = field(default_factory=list)
    max_abs_error: float | None = None
    evm_rms: float | None = None
    isi_metrics: dict | None = None
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "recovered_blocks": [
                {
                    "block_index": b.block_index,
                    "re": b.symbols.real.tolist(),
                    "im": b.symbols.imag.tolist(),
                }
                for b in self.recovered_blocks
            ],
            "per_block_max_abs_error": list(self.per_block_max_abs_error),
            "max_abs_error": self.max_abs_error,
            "evm_rms": self.evm_rms,
            "isi_metrics": self.isi_metrics,
            "meta": dict(self.meta),
        }


def receive(stream: ComplexSequence, kind: SystemKind, prefix: PrefixSpec = NO_PREFIX,
            channel_knowledge=None, profile: OfdmProfile | None = None, truth=None,
            compensate: bool = True, oversampling: int = DEFAULT_PHYSICAL_OVERSAMPLING,
            floor: float = EQUALIZATION_FLOOR, N: int | None = None) -> RunReport:
    """Split the stream into blocks, strip prefixes, transform, equalize and compensate.

    ``N`` defaults to ``profile.N``; ``channel_knowledge`` is the discrete tap
    vector (or None for no equalization). Trailing samples beyond the last full
    block (e.g. a channel tail) are ignored. ``truth`` (list of blocks) fills
    in the error fields.
    """
    kind = SystemKind(kind)
    if N is None:
        if profile is None:
            raise InvalidArgumentError("need N or a profile")
        N = profile.N
    profile = _profile_for(profile, N, stream.dt)
    span = N + prefix.L
    n_blocks = len(stream) // span
    if n_blocks == 0:
        raise InvalidArgumentError(f"stream of {len(stream)} samples holds no block of {span}")
    H = None
    if channel_knowledge is not None:
        H = subcarrier_channel_response(channel_knowledge, N, kind, profile.phi2_sign)
    comp = phase_compensation(N, profile) if (kind.is_rtft and compensate) else np.ones(N)
    recovered = []
    for m in range(n_blocks):
        payload = remove_prefix(stream.samples[m * span : (m + 1) * span], prefix.L, N)
        Y = rx_transform(payload, kind, profile, oversampling)
        if H is not None:
            Y = equalize(Y, H, floor)
        recovered.append(SymbolBlock(Y * comp, stream.dt, m))
    report = RunReport(recovered, meta={"system": kind.value, "N": N, "blocks": n_blocks})
    if truth is not None:
        truth = list(truth)
        if len(truth) < n_blocks:
            raise InvalidArgumentError("fewer truth blocks than received blocks")
        errs = [float(np.max(np.abs(r.symbols - t.symbols))) for r, t in zip(recovered, truth)]
        report.per_block_max_abs_error = errs
        report.max_abs_error = max(errs)
        num = sum(float(np.sum(np.abs(r.symbols - t.symbols) ** 2)) for r, t in zip(recovered, truth))
        den = sum(float(np.sum(np.abs(t.symbols) ** 2)) for t in truth[:n_blocks])
        report.evm_rms = float(np.sqrt(num / den)) if den > 0 else None
    return report


def boundary_error_profile(stream_rx, payloads, h, N: int, L: int = 0) -> np.ndarray:
    """Per-position error of each received payload against the circular-channel ideal.

    Returns an ``(M, N)`` array ``|y_m[k] - (h (*) x_m)[k]|`` with ``(*)``
    circular convolution: the residual the one-tap equalizer cannot undo.
    """
    y = as_complex(stream_rx, "stream")
    span = N + L
    rows = []
    for m, x in enumerate(payloads):
        seg = remove_prefix(y[m * span : (m + 1) * span], L, N)
        rows.append(np.abs(seg - circular_convolve(x, h)))
    return np.array(rows)


def isi_distortion_wsc(delta_tau: float, Ts: float):
    """Single-carrier amplitude error between paths ``delta_tau`` apart: ``2 sin^2(pi dtau/Ts)``."""
    if not Ts > 0:
        raise InvalidArgumentError("Ts must be > 0")
    return 2 * np.sin(np.pi * np.asarray(delta_tau, dtype=float) / Ts) ** 2


def isi_distortion_ofdm(n, N: int, delta_tau: float, Ts: float, An: float | None = None):
    """Subcarrier-``n`` amplitude error: ``2 A_n sin^2(pi (n/N)(dtau/Ts))``."""
    if not Ts > 0:
        raise InvalidArgumentError("Ts must be > 0")
    n_arr = np.asarray(n)
    if np.any(n_arr < 0) or np.any(n_arr > N):
        raise InvalidArgumentError("subcarrier index out of range")
    An = 1 / np.sqrt(N) if An is None else An
    return 2 * An * np.sin(np.pi * (n_arr / N) * (np.asarray(delta_tau, dtype=float) / Ts)) ** 2


def isi_distortion_wsc_direct(delta_tau: float, Ts: float, n: int = 1, tau0: float = 0.0) -> float:
    """Evaluate the two-path difference at the detection instant from the waveforms, unit symbols."""
    carrier = lambda t: np.exp(2j * np.pi * t / Ts)
    t_n = tau0 + n * Ts
    return float(abs(carrier(t_n - tau0).real - carrier(t_n - tau0 - delta_tau).real))


def isi_distortion_ofdm_direct(n: int, N: int, delta_tau: float, Ts: float,
                               An: float | None = None, m: int = 1, tau0: float = 0.0) -> float:
    """As :func:`isi_distortion_wsc_direct` for subcarrier ``n`` at block boundary ``m``."""
    An = 1 / np.sqrt(N) if An is None else An
    T0 = N * Ts
    sub = lambda t: An * np.exp(2j * np.pi * n * t / T0)
    t_m = tau0 + m * T0
    return float(abs(sub(t_m - tau0).real - sub(t_m - tau0 - delta_tau).real))


def isi_table(delta_taus, N: int, Ts: float, An: float | None = None) -> dict:
    """Closed-form ``dr_s`` and ``dr_n`` on a (delta_tau, n) grid, for reports."""
    d = np.asarray(delta_taus, dtype=float)
    n = np.arange(N)
    return {
        "delta_tau_s": d.tolist(),
        "dr_s": isi_distortion_wsc(d, Ts).tolist(),
        "dr_n": isi_distortion_ofdm(n[None, :], N, d[:, None], Ts, An).tolist(),
    }
