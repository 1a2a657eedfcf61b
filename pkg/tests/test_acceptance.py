"""Acceptance criteria, one or more tests per criterion at the stated tolerance.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import json
import math
import time

import numpy as np
import pytest
from scipy import integrate, stats

from analog_ofdm import cli, scenario
from analog_ofdm.channel import RicianSpec, apply_discrete, make_rng, rice_pdf, sample_channel, sample_gains
from analog_ofdm.conventional import demodulate_discrete, modulate_discrete
from analog_ofdm.design import OfdmProfile, Phi1Case, Phi2Sign, tx_params
from analog_ofdm.phaser import QpmParams, far_field_ratio, rtft_physical_chain
from analog_ofdm.pipeline import (
    PrefixSpec,
    SystemKind,
    boundary_error_profile,
    isi_distortion_ofdm,
    isi_distortion_ofdm_direct,
    isi_distortion_wsc,
    isi_distortion_wsc_direct,
    qpsk_symbols,
    receive,
    subcarrier_channel_response,
    transmit,
    tx_payload,
)
from analog_ofdm.prefix import PrefixKind, add_prefix, equivalent_circular_channel, remove_prefix
from analog_ofdm.rtft import normalize_peak, rtft_impulse_train, rtft_ofdm_discrete, rtft_sequence
from analog_ofdm.signal_core import ComplexSequence, SymbolBlock, circular_convolve

from .oracles import crandn

TS = 1e-9
criterion = pytest.mark.criterion


# ---- AC1


@criterion("AC1", "equivalence: RTFT output is the IDFT shifted by N/2")
def test_ac1_equivalence():
    rng = make_rng(101)
    start = time.perf_counter()
    worst = 0.0
    for N in (8, 64, 256):
        for _ in range(100):
            X = qpsk_symbols(rng, N)
            a = normalize_peak(rtft_ofdm_discrete(X))
            b = np.roll(normalize_peak(modulate_discrete(X)), -N // 2)
            worst = max(worst, float(np.max(np.abs(a - b))))
    elapsed = time.perf_counter() - start
    assert worst < 1e-9, f"max abs error {worst:.3g}"
    assert elapsed < 5.0, f"took {elapsed:.2f} s"


# ---- AC2


@criterion("AC2", "phi1-case invariance of the sampled RTFT output")
def test_ac2_phi1_invariance():
    rng = make_rng(102)
    N = 64
    zero = tx_params(OfdmProfile(N, TS, Phi1Case.ZeroStart)).mapping
    aligned = tx_params(OfdmProfile(N, TS, Phi1Case.PhaseAligned)).mapping
    k = np.arange(N)
    for _ in range(20):
        block = SymbolBlock(qpsk_symbols(rng, N), TS)
        # impulse areas X[n] Ts keep the sampled output O(1)
        s0 = TS * rtft_impulse_train(block, zero, k * TS).samples
        s1 = TS * rtft_impulse_train(block, aligned, N * TS / 2 + k * TS).samples
        err = float(np.max(np.abs(s0 - s1)))
        assert err < 1e-10, f"max abs difference {err:.3g}"


# ---- AC3


@criterion("AC3", "ideal-channel recovery and (-1)^n compensation")
@pytest.mark.parametrize("case,sign", [(c, s) for c in Phi1Case for s in Phi2Sign])
def test_ac3_ideal_recovery(case, sign):
    rng = make_rng(103)
    prof = OfdmProfile(64, TS, case, sign)
    blocks = [SymbolBlock(qpsk_symbols(rng, 64), TS, m) for m in range(5)]
    rep = receive(transmit(blocks, SystemKind.RtftIdeal, profile=prof), SystemKind.RtftIdeal,
                  profile=prof, truth=blocks)
    assert rep.max_abs_error < 1e-9, f"max abs error {rep.max_abs_error:.3g}"


@criterion("AC3", "ideal-channel recovery and (-1)^n compensation")
def test_ac3_zero_start_needs_compensation():
    rng = make_rng(104)
    prof = OfdmProfile(64, TS, Phi1Case.ZeroStart)
    for _ in range(5):
        X = crandn(rng, 64)
        blocks = [SymbolBlock(X, TS)]
        stream = transmit(blocks, SystemKind.RtftIdeal, profile=prof)
        raw = receive(stream, SystemKind.RtftIdeal, profile=prof, compensate=False).recovered_blocks[0].symbols
        fixed = receive(stream, SystemKind.RtftIdeal, profile=prof).recovered_blocks[0].symbols
        assert np.max(np.abs(raw - X * (-1.0) ** np.arange(64))) < 1e-9
        assert np.max(np.abs(fixed - X)) < 1e-9
        assert np.max(np.abs(raw - X)) >= 2 * np.min(np.abs(X))


# ---- AC4


def _lemma_worst(kind, trials):
    worst = 0.0
    for x, h in trials:
        out = equivalent_circular_channel(x, h, kind, check=False)
        ref = circular_convolve(x, h)
        worst = max(worst, float(np.max(np.abs(out - ref))))
    return worst


def _lemma_trials(seed):
    rng = make_rng(seed)
    trials = []
    for _ in range(200):
        N = int(rng.integers(1, 33))
        L = int(rng.integers(1, N + 1))
        trials.append((crandn(rng, N), crandn(rng, L)))
    # every (N, L) pair as well
    for N in range(1, 33):
        for L in range(1, N + 1):
            trials.append((crandn(rng, N), crandn(rng, L)))
    return trials


@criterion("AC4", "prefix lemma: discard-prefix output is a circular convolution")
def test_ac4_cyclic_prefix():
    worst = _lemma_worst(PrefixKind.CP, _lemma_trials(104))
    assert worst < 1e-12, f"CP worst deviation {worst:.3g}"


@criterion("AC4", "prefix lemma: discard-prefix output is a circular convolution")
def test_ac4_zero_padding_prefix():
    worst = _lemma_worst(PrefixKind.ZP, _lemma_trials(105))
    assert worst < 1e-12, f"ZP worst deviation {worst:.3g}"


# ---- AC5

FIG7_SPEC = RicianSpec(s=1.0, sigma=0.5, L=10, spacing=TS)


@criterion("AC5", "multipath recovery with a zero-padding prefix")
def test_ac5_zp_recovery():
    prof = OfdmProfile(64, TS)
    data = make_rng(105)
    prefix = PrefixSpec(PrefixKind.ZP, 10)
    worst = 0.0
    for seed in range(50):
        h = sample_channel(seed, FIG7_SPEC).tap_vector(TS)
        blocks = [SymbolBlock(qpsk_symbols(data, 64), TS, m) for m in range(2)]
        stream = transmit(blocks, SystemKind.RtftIdeal, prefix, profile=prof)
        rx = ComplexSequence(apply_discrete(stream.samples, h), TS)
        rep = receive(rx, SystemKind.RtftIdeal, prefix, channel_knowledge=h, profile=prof, truth=blocks)
        worst = max(worst, rep.max_abs_error)
    assert worst < 1e-6, f"worst max abs error over 50 seeds {worst:.3g}"


@criterion("AC5", "multipath recovery with a zero-padding prefix")
def test_ac5_no_prefix_boundary_errors():
    prof = OfdmProfile(64, TS)
    data = make_rng(106)
    N, L = 64, 10
    hits = 0
    for seed in range(50):
        h = sample_channel(seed, FIG7_SPEC).tap_vector(TS)
        blocks = [SymbolBlock(qpsk_symbols(data, N), TS, m) for m in range(3)]
        payloads = [tx_payload(b, SystemKind.RtftIdeal, prof) for b in blocks]
        rx = apply_discrete(np.concatenate(payloads), h)
        err = boundary_error_profile(rx, payloads, h, N)[1:]
        hits += int(err[:, :L].mean() > err[:, L:].mean())
    assert hits >= 45, f"boundary error dominated in {hits}/50 seeds"


# ---- AC6


@criterion("AC6", "conventional CP system: Y[i] = H[i] X[i]")
def test_ac6_cp_conventional():
    data = make_rng(107)
    N, L = 64, 10
    prefix = PrefixSpec(PrefixKind.CP, L)
    worst = 0.0
    for seed in range(50):
        h = sample_channel(seed, FIG7_SPEC).tap_vector(TS)
        H = subcarrier_channel_response(h, N)
        blocks = [SymbolBlock(qpsk_symbols(data, N), TS, m) for m in range(2)]
        rx = apply_discrete(transmit(blocks, SystemKind.ConventionalFFT, prefix).samples, h)
        for m, b in enumerate(blocks):
            y = remove_prefix(rx[m * (N + L) : (m + 1) * (N + L)], L, N)
            worst = max(worst, float(np.max(np.abs(demodulate_discrete(y) - H * b.symbols))))
    assert worst < 1e-10, f"max abs error {worst:.3g}"


# ---- AC7


@criterion("AC7", "ISI metrics: closed forms and the single-carrier vs OFDM ordering")
def test_ac7_closed_forms():
    N = 100
    worst = 0.0
    for dtau in np.linspace(0, 1, 102)[1:-1] * TS:
        worst = max(worst, abs(isi_distortion_wsc(dtau, TS) - isi_distortion_wsc_direct(dtau, TS)))
        for n in range(N):
            worst = max(worst, abs(isi_distortion_ofdm(n, N, dtau, TS) - isi_distortion_ofdm_direct(n, N, dtau, TS)))
    assert worst < 1e-10, f"closed form vs direct {worst:.3g}"


@criterion("AC7", "ISI metrics: closed forms and the single-carrier vs OFDM ordering")
def test_ac7_ordering_on_full_grid():
    N = 100
    dtau = np.linspace(0, 1, 102)[1:-1] * TS
    n = np.arange(N)
    drs = np.broadcast_to(isi_distortion_wsc(dtau, TS)[:, None], (dtau.size, N))
    drn = isi_distortion_ofdm(n[None, :], N, dtau[:, None], TS)
    bad = np.argwhere(drs <= drn)
    assert bad.size == 0, (
        f"{len(bad)} of {drs.size} grid points violate dr_s > dr_n; "
        f"first at dtau = {dtau[bad[0][0]] / TS:.3f} Ts, n = {bad[0][1]}"
    )


# ---- AC8


@criterion("AC8", "far-field ratio equals N")
@pytest.mark.parametrize("N", [4, 64, 1024])
def test_ac8_far_field_ratio(N):
    for Ts in (1e-9, 0.5e-9, 1e-6, 3.7e-12):
        assert far_field_ratio(N * Ts, N * Ts * Ts / (2 * math.pi)) == N


# ---- AC9


@criterion("AC9", "physical phaser chain with time lenses matches the ideal RTFT")
def test_ac9_physical_chain():
    rng = make_rng(109)
    tx = tx_params(OfdmProfile(8, TS))
    seq = ComplexSequence(qpsk_symbols(rng, 8), TS)

    def rel_error(qpm):
        out = rtft_physical_chain(seq, tx, qpm, oversampling=64)
        ideal = rtft_sequence(seq, tx.mapping, out.times)
        return float(np.linalg.norm(out.samples - ideal) / np.linalg.norm(ideal))

    with_qpm = rel_error(QpmParams.matched(tx.phi2))
    without = rel_error(QpmParams.disabled())
    assert with_qpm < 1e-2, f"relative L2 error {with_qpm:.3g}"
    assert without >= 10 * with_qpm, f"without QPM {without:.3g} vs with {with_qpm:.3g}"


# ---- AC10


@criterion("AC10", "Rician sampler matches its density")
@pytest.mark.parametrize("s,sigma,seed", [(0.0, 1.0, 11), (1.0, 1.0, 12), (3.0, 0.5, 13)])
def test_ac10_rician_sampler(s, sigma, seed):
    spec = RicianSpec(s, sigma)
    mags = np.abs(sample_gains(make_rng(seed), spec, size=100_000))
    r = np.linspace(0.0, s + 12 * sigma, 200_001)
    cdf = integrate.cumulative_trapezoid(rice_pdf(r, spec), r, initial=0.0)
    ks = stats.kstest(mags, lambda x: np.interp(x, r, cdf)).statistic
    assert ks < 0.01, f"KS statistic {ks:.4f}"
    target = s * s + 2 * sigma * sigma
    by_quad, _ = integrate.quad(lambda x: x * x * rice_pdf(x, spec), 0, np.inf, limit=200)
    assert by_quad == pytest.approx(target, rel=1e-6)
    mc = float(np.mean(mags**2))
    assert abs(mc - target) < 0.03 * target, f"E(R^2) {mc:.4f} vs {target:.4f}"


# ---- AC11


@criterion("AC11", "design CLI feasibility arithmetic")
def test_ac11_design_cli(capsys):
    assert cli.main(["design", "--n", "64", "--ts", "1e-9", "--json"]) == 0
    fast = json.loads(capsys.readouterr().out)
    assert fast["feasibility"]["phi2_magnitude"] == 64 * (1e-9) ** 2 / (2 * math.pi)
    assert fast["feasibility"]["practical"] is True
    assert cli.main(["design", "--n", "64", "--ts", "1e-6", "--json"]) == 0
    slow = json.loads(capsys.readouterr().out)
    assert slow["feasibility"]["phi2_magnitude"] == 64 * (1e-6) ** 2 / (2 * math.pi)
    assert slow["feasibility"]["practical"] is False


# ---- AC12


@criterion("AC12", "bundled presets are byte-for-byte reproducible")
@pytest.mark.parametrize("name", scenario.preset_names())
def test_ac12_determinism(tmp_path, name):
    a, b = tmp_path / "a", tmp_path / "b"
    assert cli.main(["run", name, "--out-dir", str(a)]) == 0
    assert cli.main(["run", name, "--out-dir", str(b)]) == 0
    files = sorted(p.name for p in a.iterdir())
    assert files == sorted(p.name for p in b.iterdir())
    for f in files:
        assert (a / f).read_bytes() == (b / f).read_bytes(), f
