import numpy as np
import pytest

from analog_ofdm.conventional import (
    SubcarrierSpec,
    WindowSpec,
    demodulate_discrete,
    evaluate_continuous,
    modulate_continuous,
    modulate_discrete,
    spectrum,
    subcarrier_waveform,
)
from analog_ofdm.errors import InvalidArgumentError
from analog_ofdm.signal_core import SymbolBlock, idft

from .oracles import crandn, qpsk

TS = 1e-6


def block(X, Ts=TS):
    return SymbolBlock(np.asarray(X, dtype=complex), Ts)


def direct_waveform(X, T0, t):
    N = len(X)
    inside = (t >= 0) & (t < T0)
    return np.array(
        [inside[i] * sum(X[n] * np.exp(2j * np.pi * n * ti / T0) for n in range(N)) / np.sqrt(N) for i, ti in enumerate(t)]
    )


def test_continuous_trivial_values():
    x = modulate_continuous(block([1, 1, 1, 1]), 8)
    assert x.samples[0] == pytest.approx(2.0)
    dc = modulate_continuous(block([1, 0, 0, 0]), 8)
    np.testing.assert_allclose(dc.samples, 0.5)
    assert dc.dt == pytest.approx(TS / 8) and dc.t0 == 0.0


def test_continuous_matches_direct_sum():
    b = block([1, 1, 1, 1])
    x = modulate_continuous(b, 32)
    np.testing.assert_allclose(x.samples, direct_waveform(b.symbols, b.T0, x.times), atol=1e-12)


def test_window_is_half_open():
    b = block([1, 1, 1, 1])
    vals = evaluate_continuous(b, [-1e-12, 0.0, b.T0 - 1e-12, b.T0])
    assert vals[0] == 0 and vals[3] == 0 and vals[1] != 0 and vals[2] != 0
    w = WindowSpec(center=1.0, width=2.0)
    np.testing.assert_array_equal(w([0.0, 1.999, 2.0]), [1.0, 1.0, 0.0])


def test_subcarriers_sum_to_block(rng):
    b = block(qpsk(rng, 8))
    t = np.linspace(0, b.T0, 100, endpoint=False)
    total = sum(subcarrier_waveform(b, n, t) for n in range(b.N))
    np.testing.assert_allclose(total, evaluate_continuous(b, t), atol=1e-12)


def test_spectrum_trivial_points():
    b = block([1, 0, 0, 0])
    assert spectrum(b, [0.0])[0] == pytest.approx(b.T0 / 2)
    ones = block([1, 1, 1, 1])
    val = spectrum(ones, [1 / ones.T0])[0]
    assert abs(val) == pytest.approx(ones.T0 / 2)


def test_spectrum_matches_numerical_transform(rng):
    b = block(qpsk(rng, 8))
    x = modulate_continuous(b, 256)
    # subcarrier frequencies plus midpoints between them
    f = np.arange(0, b.N, 0.5) / b.T0
    numeric = np.array([np.sum(x.samples * np.exp(-2j * np.pi * fi * x.times)) * x.dt for fi in f])
    closed = spectrum(b, f)
    on_grid = slice(0, None, 2)
    rel = np.abs(closed[on_grid] - numeric[on_grid]) / np.abs(closed[on_grid])
    assert np.max(rel) < 1e-2
    # full complex agreement including between carriers, scaled to the peak
    assert np.max(np.abs(closed - numeric)) < 2e-2 * np.max(np.abs(closed))


def test_subcarrier_orthogonality():
    N, os_ = 8, 64
    T0 = N * TS
    dt = TS / os_
    t = np.arange(N * os_) * dt
    for n in range(N):
        pn = SubcarrierSpec(n, N, T0)
        for m in range(N):
            pm = SubcarrierSpec(m, N, T0)
            ip = np.sum(pn(t) * np.conj(pm(t))) * dt
            if n == m:
                assert abs(ip - pn.amplitude**2 * T0) < 1e-6 * pn.amplitude**2 * T0
            else:
                assert abs(ip) < 1e-3 * T0 * pn.amplitude**2


def test_subcarrier_spec():
    s = SubcarrierSpec(3, 8, 8e-6)
    assert s.frequency == pytest.approx(3 / 8e-6)
    assert s.amplitude == pytest.approx(1 / np.sqrt(8))
    with pytest.raises(InvalidArgumentError):
        SubcarrierSpec(8, 8, 1.0)
    with pytest.raises(InvalidArgumentError):
        SubcarrierSpec(0, 8, 1.0, amplitude=-1.0)


def test_discrete_modem_examples(rng):
    np.testing.assert_allclose(modulate_discrete([1, 0, 0, 0]), [0.5] * 4, atol=1e-15)
    np.testing.assert_allclose(modulate_discrete([1, 1, 1, 1]), [2, 0, 0, 0], atol=1e-15)
    np.testing.assert_allclose(demodulate_discrete([2, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)
    X = crandn(rng, 64)
    np.testing.assert_allclose(modulate_discrete(X), np.sqrt(64) * idft(X), atol=1e-13)
    assert np.max(np.abs(demodulate_discrete(modulate_discrete(X)) - X)) < 1e-12


def test_discrete_modem_unitary_and_power(rng):
    X = crandn(rng, 64)
    x = modulate_discrete(X)
    assert abs(np.sum(np.abs(x) ** 2) / np.sum(np.abs(X) ** 2) - 1) < 1e-10
    ones = modulate_discrete(np.ones(64))
    assert abs(np.mean(np.abs(ones) ** 2) - 1) < 1e-10


def test_continuous_at_symbol_rate_demodulates(rng):
    b = block(qpsk(rng, 16))
    x = modulate_continuous(b, 1)
    assert np.max(np.abs(demodulate_discrete(x.samples) - b.symbols)) < 1e-10


def test_bad_oversampling():
    with pytest.raises(InvalidArgumentError):
        modulate_continuous(block([1, 1]), 0)
    with pytest.raises(InvalidArgumentError):
        modulate_continuous(block([1, 1]), 1.5)
