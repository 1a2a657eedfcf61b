import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, stats

from analog_ofdm.channel import (
    ChannelRealization,
    RicianSpec,
    apply_continuous,
    apply_discrete,
    make_rng,
    rice_pdf,
    sample_channel,
    sample_gains,
)
from analog_ofdm.conventional import modulate_continuous
from analog_ofdm.errors import InvalidArgumentError
from analog_ofdm.signal_core import ComplexSequence, SymbolBlock, linear_convolve

from .oracles import crandn, stream_channel_loop

TS = 1e-9


def rice_cdf_table(spec, r_max, n=200001):
    r = np.linspace(0.0, r_max, n)
    return r, integrate.cumulative_trapezoid(rice_pdf(r, spec), r, initial=0.0)


# ---- density


def test_rice_reduces_to_rayleigh():
    spec = RicianSpec(0.0, 1.3)
    r = np.linspace(0, 6, 50)
    np.testing.assert_allclose(rice_pdf(r, spec), stats.rayleigh.pdf(r, scale=1.3), rtol=1e-12, atol=1e-300)


def test_rice_zero_at_origin():
    assert rice_pdf(0.0, RicianSpec(2.0, 0.7)) == 0.0


def test_rice_matches_scipy_rice():
    spec = RicianSpec(3.0, 0.5)
    r = np.linspace(0.01, 6, 40)
    np.testing.assert_allclose(rice_pdf(r, spec), stats.rice.pdf(r, 3.0 / 0.5, scale=0.5), rtol=1e-10)


@pytest.mark.parametrize("s,sigma", [(0, 1), (1, 1), (3, 0.5)])
def test_rice_normalized(s, sigma):
    spec = RicianSpec(s, sigma)
    total, _ = integrate.quad(lambda r: rice_pdf(r, spec), 0, np.inf, limit=200)
    assert abs(total - 1) < 1e-6


def test_rice_large_argument_finite():
    # r s / sigma^2 = 1e6: unscaled I0 would overflow
    val = rice_pdf(1000.0, RicianSpec(1000.0, 1.0))
    assert math.isfinite(val)
    assert val == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-3)


def test_rice_rejects_negative():
    with pytest.raises(InvalidArgumentError):
        rice_pdf(-0.1, RicianSpec())
    with pytest.raises(InvalidArgumentError):
        rice_pdf([0.1, -1.0], RicianSpec())


def test_spec_validation():
    for kwargs in ({"s": -1}, {"sigma": 0}, {"L": 0}, {"L": 2.5}, {"spacing": 0}):
        with pytest.raises(InvalidArgumentError):
            RicianSpec(**kwargs)


# ---- sampler


def test_sample_channel_deterministic():
    spec = RicianSpec(1.0, 0.5, L=10, spacing=TS)
    a, b = sample_channel(7, spec), sample_channel(7, spec)
    assert a == b
    assert a.to_json() == b.to_json()
    assert sample_channel(8, spec) != a
    np.testing.assert_allclose(a.delays, np.arange(10) * TS)


def test_rng_is_named_pcg64():
    assert isinstance(make_rng(3).bit_generator, np.random.PCG64)
    assert make_rng(3).standard_normal() == make_rng(3).standard_normal()


def test_rayleigh_second_moment():
    spec = RicianSpec(0.0, 1.0)
    g = sample_gains(make_rng(11), spec, size=100_000)
    assert abs(np.mean(np.abs(g) ** 2) - 2.0) < 0.03 * 2.0
    by_quad, _ = integrate.quad(lambda r: r * r * rice_pdf(r, spec), 0, np.inf)
    assert by_quad == pytest.approx(2.0, rel=1e-8)


@pytest.mark.parametrize("s,sigma,seed", [(0.0, 1.0, 1), (1.0, 1.0, 2), (3.0, 0.5, 3)])
def test_sampler_matches_density(s, sigma, seed):
    spec = RicianSpec(s, sigma)
    mags = np.abs(sample_gains(make_rng(seed), spec, size=100_000))
    r, cdf = rice_cdf_table(spec, s + 12 * sigma)
    ks = stats.kstest(mags, lambda x: np.interp(x, r, cdf)).statistic
    assert ks < 0.01


def test_phase_uniform():
    g = sample_gains(make_rng(4), RicianSpec(2.0, 0.3), size=100_000)
    u = (np.angle(g) % (2 * math.pi)) / (2 * math.pi)
    assert stats.kstest(u, "uniform").statistic < 0.01


def test_nlos_rayleigh_and_normalization():
    spec = RicianSpec(5.0, 0.1, L=4, nlos_rayleigh=True)
    np.testing.assert_array_equal(spec.los_amplitudes(), [5.0, 0, 0, 0])
    mags = np.array([np.abs(sample_channel(k, spec).gains) for k in range(200)])
    assert np.mean(mags[:, 0]) > 4.5 and np.mean(mags[:, 1:]) < 0.5
    norm = sample_channel(1, RicianSpec(1.0, 1.0, L=6, normalize=True))
    assert np.sum(np.abs(norm.gains) ** 2) == pytest.approx(1.0)


# ---- realization


def test_realization_validation_and_json():
    with pytest.raises(InvalidArgumentError):
        ChannelRealization([1, 2], [0.0])
    with pytest.raises(InvalidArgumentError):
        ChannelRealization([1, 2], [1.0, 1.0])
    r = sample_channel(5, RicianSpec(1.0, 1.0, L=3, spacing=TS, tau0=2 * TS))
    d = r.to_dict()
    assert set(d) == {"taps"} and set(d["taps"][0]) == {"re", "im", "delay_s"}
    assert ChannelRealization.from_json(r.to_json()) == r
    with pytest.raises(InvalidArgumentError, match="malformed"):
        ChannelRealization.from_dict({"taps": [{"re": 1}]})


def test_tap_vector():
    r = ChannelRealization([1, 0.5j, -0.25], np.array([3, 4, 6]) * TS)
    np.testing.assert_allclose(r.tap_vector(TS), [1, 0.5j, 0, -0.25])
    with pytest.raises(InvalidArgumentError, match="tau_1"):
        ChannelRealization([1, 1], [0.0, 1.5 * TS]).tap_vector(TS)
    assert ChannelRealization.from_taps([1, 2, 3], TS).L == 3


# ---- application


def test_apply_discrete_examples(rng):
    x = crandn(rng, 5)
    np.testing.assert_allclose(apply_discrete(x, [1]), x)
    np.testing.assert_allclose(apply_discrete([1, 2, 3], [0, 1]), [0, 1, 2])
    x, h = crandn(rng, 64), crandn(rng, 10)
    np.testing.assert_allclose(apply_discrete(x, h), stream_channel_loop(x, h), atol=1e-12)
    np.testing.assert_allclose(apply_discrete(x, h, full=True), linear_convolve(x, h), atol=1e-12)


def test_apply_continuous_examples():
    x = ComplexSequence([1, 2, 3], TS)
    assert apply_continuous(x, ChannelRealization([1], [0.0])) == x
    imp = ComplexSequence([1.0], TS / 4)
    out = apply_continuous(imp, ChannelRealization([1, 0.5], [0.0, TS]))
    np.testing.assert_allclose(out.samples, [1, 0, 0, 0, 0.5])
    assert out.t0 == imp.t0 and out.dt == imp.dt


def test_apply_continuous_names_bad_delay():
    x = ComplexSequence(np.ones(4), TS)
    with pytest.raises(InvalidArgumentError, match="tau_2"):
        apply_continuous(x, ChannelRealization([1, 1, 1], [0.0, TS, 2.3 * TS]))


def test_apply_continuous_agrees_with_discrete(rng):
    x, h = crandn(rng, 40), crandn(rng, 6)
    y = apply_continuous(ComplexSequence(x, TS), ChannelRealization.from_taps(h, TS))
    np.testing.assert_allclose(y.samples, apply_discrete(x, h, full=True), atol=1e-12)


def test_oversampled_waveform_matches_discrete_at_symbol_instants():
    os_ = 8
    spec = RicianSpec(1.0, 0.5, L=10, spacing=TS)
    real = sample_channel(7, spec)
    X = np.zeros(64, complex)
    X[:4] = 1
    wave = modulate_continuous(SymbolBlock(X, TS), os_)
    y = apply_continuous(wave, real)
    at_symbols = y.samples[::os_][:64]
    ref = apply_discrete(wave.samples[::os_], real.tap_vector(TS))
    assert np.max(np.abs(at_symbols - ref)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.integers(0, 9))
def test_shift_invariance(seed, L, k):
    r = np.random.default_rng(seed)
    x, h = crandn(r, 20), crandn(r, L)
    shifted = np.concatenate([np.zeros(k), x])
    y = apply_discrete(shifted, h, full=True)
    np.testing.assert_allclose(y[k:], apply_discrete(x, h, full=True), atol=1e-12)
    assert np.all(y[:k] == 0)
    yc = apply_continuous(ComplexSequence(shifted, TS), ChannelRealization.from_taps(h, TS))
    np.testing.assert_allclose(yc.samples, y, atol=1e-12)
