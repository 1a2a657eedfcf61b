"""Declarative scenarios: parse and validate a JSON config, run it, render outputs.

Running a scenario returns every output file as text keyed by file name; the
caller decides where (and whether) to write them, so a failure never leaves
partial results behind.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import conventional, design, pipeline, rtft
from .channel import ChannelRealization, RicianSpec, apply_discrete, make_rng, sample_channel
from .errors import AnalogOfdmError
from .prefix import PrefixKind
from .signal_core import ComplexSequence, SymbolBlock

EXPERIMENTS = ("link", "subcarriers", "rtft_generation", "idft_vs_rtft", "group_delay")
FORMAT_VERSION = 1


class ConfigError(AnalogOfdmError):
    def __init__(self, field_name, message):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


class ConfigParseError(ConfigError):
    """Malformed JSON, a missing field or a wrongly typed value (exit status 1)."""


class ConfigValidationError(ConfigError):
    """Well-formed config with out-of-range or inconsistent values (exit status 2)."""


def fmt(x) -> str:
    """Locale-free round-trip float formatting."""
    return format(float(x), ".17g")


# ---------------------------------------------------------------- parsing

_MISSING = object()


def _get(d, key, kind, path, default=_MISSING):
    name = f"{path}.{key}" if path else key
    if key not in d:
        if default is _MISSING:
            raise ConfigParseError(name, "required field is missing")
        return default
    val = d[key]
    if kind is float:
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            raise ConfigParseError(name, f"expected a number, got {type(val).__name__}")
        return float(val)
    if kind is int:
        if isinstance(val, bool) or not isinstance(val, int):
            raise ConfigParseError(name, f"expected an integer, got {type(val).__name__}")
        return val
    if not isinstance(val, kind):
        expected = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ConfigParseError(name, f"expected {expected}, got {type(val).__name__}")
    return val


def _enum(value, enum_cls, name):
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ConfigValidationError(name, f"{value!r} is not one of {allowed}") from None


def _complex_entry(v, name):
    if isinstance(v, bool):
        raise ConfigParseError(name, "expected a number or [re, im]")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(
        isinstance(p, (int, float)) and not isinstance(p, bool) for p in v
    ):
        return complex(v[0], v[1])
    raise ConfigParseError(name, "expected a number or [re, im]")


@dataclass(frozen=True)
class ChannelConfig:
    kind: str = "ideal"  # ideal | taps | rician
    taps: ChannelRealization | None = None
    rician: RicianSpec | None = None
    seeds: tuple = (0,)


@dataclass(frozen=True)
class SymbolConfig:
    explicit: tuple | None = None
    constellation: str = "QPSK"
    seed: int = 0
    blocks: int = 1


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    N: int
    Ts: float
    experiment: str = "link"
    description: str = ""
    figure: str = ""
    system: pipeline.SystemKind = pipeline.SystemKind.RtftIdeal
    phi1_case: design.Phi1Case = design.Phi1Case.PhaseAligned
    phi2_sign: design.Phi2Sign = design.Phi2Sign.Plus
    prefix: pipeline.PrefixSpec = pipeline.NO_PREFIX
    channel: ChannelConfig = field(default_factory=ChannelConfig)
    symbols: SymbolConfig = field(default_factory=SymbolConfig)
    oversampling: int = conventional.DEFAULT_OVERSAMPLING
    physical_oversampling: int = pipeline.DEFAULT_PHYSICAL_OVERSAMPLING
    also_without_prefix: bool = False
    spectrum_points: int = 801
    band: str | None = None
    output_dir: str | None = None
    raw: dict = field(default_factory=dict, compare=False)

    @property
    def profile(self) -> design.OfdmProfile:
        return design.OfdmProfile(self.N, self.Ts, self.phi1_case, self.phi2_sign)


def _parse_channel(raw, Ts, N) -> ChannelConfig:
    if raw == "ideal":
        return ChannelConfig()
    if not isinstance(raw, dict):
        raise ConfigParseError("channel", 'expected "ideal" or an object')
    if "taps" in raw:
        taps = _get(raw, "taps", list, "channel")
        for i, t in enumerate(taps):
            if not isinstance(t, dict):
                raise ConfigParseError(f"channel.taps[{i}]", "expected an object")
            for k in ("re", "im", "delay_s"):
                _get(t, k, float, f"channel.taps[{i}]")
        try:
            real = ChannelRealization.from_dict(raw)
            real.tap_vector(Ts)
        except AnalogOfdmError as exc:
            raise ConfigValidationError("channel.taps", str(exc)) from None
        return ChannelConfig("taps", taps=real)
    if "rician" in raw:
        r = _get(raw, "rician", dict, "channel")
        p = "channel.rician"
        spacing = _get(r, "spacing", float, p, Ts)
        try:
            spec = RicianSpec(
                s=_get(r, "s", float, p),
                sigma=_get(r, "sigma", float, p),
                L=_get(r, "L", int, p),
                tau0=_get(r, "tau0", float, p, 0.0),
                spacing=spacing,
                nlos_rayleigh=_get(r, "nlos_rayleigh", bool, p, False),
                normalize=_get(r, "normalize", bool, p, False),
            )
        except AnalogOfdmError as exc:
            raise ConfigValidationError(p, str(exc)) from None
        if abs(spacing / Ts - round(spacing / Ts)) > 1e-9:
            raise ConfigValidationError(f"{p}.spacing", "must be an integer multiple of Ts")
        if "seeds" in raw:
            seeds = _get(raw, "seeds", list, "channel")
            for i, s in enumerate(seeds):
                if isinstance(s, bool) or not isinstance(s, int):
                    raise ConfigParseError(f"channel.seeds[{i}]", "expected an integer")
            if not seeds:
                raise ConfigValidationError("channel.seeds", "must be non-empty")
        else:
            seeds = [_get(raw, "seed", int, "channel", 0)]
        if any(s < 0 for s in seeds):
            raise ConfigValidationError("channel.seeds", "seeds must be >= 0")
        return ChannelConfig("rician", rician=spec, seeds=tuple(seeds))
    raise ConfigParseError("channel", 'expected "ideal", {"taps": ...} or {"rician": ...}')


def _parse_symbols(raw, N) -> SymbolConfig:
    if not isinstance(raw, dict):
        raise ConfigParseError("symbols", "expected an object")
    if "explicit" in raw:
        blocks = _get(raw, "explicit", list, "symbols")
        if not blocks:
            raise ConfigValidationError("symbols.explicit", "must hold at least one block")
        parsed = []
        for b, block in enumerate(blocks):
            name = f"symbols.explicit[{b}]"
            if not isinstance(block, list):
                raise ConfigParseError(name, "expected a list of symbols")
            if len(block) != N:
                raise ConfigValidationError(name, f"has {len(block)} symbols, expected N = {N}")
            parsed.append(tuple(_complex_entry(v, f"{name}[{i}]") for i, v in enumerate(block)))
        return SymbolConfig(explicit=tuple(parsed))
    const = _get(raw, "constellation", str, "symbols", "QPSK")
    if const != "QPSK":
        raise ConfigValidationError("symbols.constellation", f"unsupported constellation {const!r}")
    seed = _get(raw, "seed", int, "symbols", 0)
    blocks = _get(raw, "blocks", int, "symbols", 1)
    if seed < 0:
        raise ConfigValidationError("symbols.seed", "must be >= 0")
    if blocks < 1:
        raise ConfigValidationError("symbols.blocks", "must be >= 1")
    return SymbolConfig(constellation=const, seed=seed, blocks=blocks)


def parse_config(raw) -> ScenarioConfig:
    """Build a :class:`ScenarioConfig` from decoded JSON."""
    if not isinstance(raw, dict):
        raise ConfigParseError("<root>", "expected a JSON object")
    name = _get(raw, "name", str, "")
    N = _get(raw, "N", int, "")
    Ts = _get(raw, "Ts", float, "")
    if N < 1:
        raise ConfigValidationError("N", "must be >= 1")
    if not (Ts > 0 and math.isfinite(Ts)):
        raise ConfigValidationError("Ts", "must be positive and finite")
    experiment = _get(raw, "experiment", str, "", "link")
    if experiment not in EXPERIMENTS:
        raise ConfigValidationError("experiment", f"{experiment!r} is not one of {', '.join(EXPERIMENTS)}")
    system = _enum(_get(raw, "system", str, "", "RtftIdeal"), pipeline.SystemKind, "system")
    phi1 = _enum(_get(raw, "phi1_case", str, "", "PhaseAligned"), design.Phi1Case, "phi1_case")
    phi2 = _enum(_get(raw, "phi2_sign", str, "", "Plus"), design.Phi2Sign, "phi2_sign")

    pre_raw = _get(raw, "prefix", dict, "", {"kind": "NONE", "L": 0})
    pkind = _enum(_get(pre_raw, "kind", str, "prefix", "NONE"), PrefixKind, "prefix.kind")
    L = _get(pre_raw, "L", int, "prefix", 0)
    if L < 0:
        raise ConfigValidationError("prefix.L", "must be >= 0")
    if pkind is PrefixKind.NONE and L:
        raise ConfigValidationError("prefix.L", "must be 0 when prefix.kind is NONE")
    if pkind is PrefixKind.CP and L > N:
        raise ConfigValidationError("prefix.L", f"cyclic prefix length {L} exceeds N = {N}")

    def positive_int(key, default):
        v = _get(raw, key, int, "", default)
        if v < 1:
            raise ConfigValidationError(key, "must be >= 1")
        return v

    out_raw = _get(raw, "outputs", dict, "", {})
    band = _get(raw, "band", str, "", None)
    if band is not None and band not in design.BAND_PRESETS:
        raise ConfigValidationError("band", f"unknown band preset {band!r}")
    cfg = ScenarioConfig(
        name=name,
        N=N,
        Ts=Ts,
        experiment=experiment,
        description=_get(raw, "description", str, "", ""),
        figure=_get(raw, "figure", str, "", ""),
        system=system,
        phi1_case=phi1,
        phi2_sign=phi2,
        prefix=pipeline.PrefixSpec(pkind, L),
        channel=_parse_channel(raw.get("channel", "ideal"), Ts, N),
        symbols=_parse_symbols(raw.get("symbols", {}), N),
        oversampling=positive_int("oversampling", conventional.DEFAULT_OVERSAMPLING),
        physical_oversampling=positive_int("physical_oversampling", pipeline.DEFAULT_PHYSICAL_OVERSAMPLING),
        also_without_prefix=_get(raw, "also_without_prefix", bool, "", False),
        spectrum_points=positive_int("spectrum_points", 801),
        band=band,
        output_dir=_get(out_raw, "dir", str, "outputs", None),
        raw=raw,
    )
    if cfg.channel.kind != "ideal" and experiment == "link":
        h = _channel_taps(cfg, cfg.channel.seeds[0])
        if h.size > N:
            raise ConfigValidationError("channel", f"channel spans {h.size} samples, more than N = {N}")
    return cfg


def load_config(text: str) -> ScenarioConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError("<json>", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_config(raw)


# ---------------------------------------------------------------- presets


def preset_names() -> list:
    files = resources.files("analog_ofdm").joinpath("presets")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def preset_text(name: str) -> str:
    path = resources.files("analog_ofdm").joinpath("presets", f"{name}.json")
    if not path.is_file():
        raise KeyError(name)
    return path.read_text(encoding="utf-8")


def list_presets() -> list:
    """``(name, figure, description)`` for every bundled preset."""
    rows = []
    for name in preset_names():
        raw = json.loads(preset_text(name))
        rows.append((name, raw.get("figure", ""), raw.get("description", "")))
    return rows


# ---------------------------------------------------------------- rendering


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, (str, int)) and not isinstance(v, bool) else fmt(v) for v in row])
    return buf.getvalue()


WAVEFORM_COLUMNS = ("t_seconds", "re", "im")
SYMBOL_COLUMNS = ("block", "n", "tx_re", "tx_im", "rx_re", "rx_im", "abs_err")
SPECTRUM_COLUMNS = ("f_hz", "re", "im")
GROUP_DELAY_COLUMNS = ("f_hz", "group_delay_s")


def waveform_csv(t, values) -> str:
    v = np.asarray(values, dtype=complex)
    return csv_text(WAVEFORM_COLUMNS, zip(np.asarray(t, dtype=float), v.real, v.imag))


def json_text(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return obj


class Outputs:
    """Ordered collection of output files plus their column manifest."""

    def __init__(self, name):
        self.name = name
        self.files = {}
        self.manifest = {}

    def add(self, suffix, text, columns=None, description=""):
        fname = f"{self.name}_{suffix}"
        self.files[fname] = text
        self.manifest[fname] = {"columns": list(columns) if columns else None, "description": description}
        return fname

    def finish(self, report: dict) -> dict:
        self.add("report.json", json_text(report), description="run report")
        manifest = {"format_version": FORMAT_VERSION, "files": self.manifest}
        self.files[f"{self.name}_manifest.json"] = json_text(manifest)
        return self.files


# ---------------------------------------------------------------- experiments


def scenario_blocks(cfg: ScenarioConfig) -> list:
    if cfg.symbols.explicit is not None:
        return [SymbolBlock(np.array(b), cfg.Ts, m) for m, b in enumerate(cfg.symbols.explicit)]
    rng = make_rng(cfg.symbols.seed)
    return [SymbolBlock(pipeline.qpsk_symbols(rng, cfg.N), cfg.Ts, m) for m in range(cfg.symbols.blocks)]


def _channel_taps(cfg: ScenarioConfig, seed: int) -> np.ndarray:
    ch = cfg.channel
    if ch.kind == "ideal":
        return np.ones(1, dtype=complex)
    if ch.kind == "taps":
        return ch.taps.tap_vector(cfg.Ts)
    return sample_channel(seed, ch.rician).tap_vector(cfg.Ts)


def _channel_realization(cfg, seed):
    if cfg.channel.kind == "taps":
        return cfg.channel.taps
    if cfg.channel.kind == "rician":
        return sample_channel(seed, cfg.channel.rician)
    return ChannelRealization.from_taps([1.0], cfg.Ts)


def _link_once(cfg: ScenarioConfig, seed: int, prefix: pipeline.PrefixSpec):
    blocks = scenario_blocks(cfg)
    h = _channel_taps(cfg, seed)
    tx = pipeline.transmit(blocks, cfg.system, prefix, cfg.profile, cfg.physical_oversampling)
    rx = ComplexSequence(apply_discrete(tx.samples, h), cfg.Ts)
    knowledge = None if cfg.channel.kind == "ideal" else h
    report = pipeline.receive(
        rx, cfg.system, prefix, knowledge, cfg.profile, truth=blocks, oversampling=cfg.physical_oversampling
    )
    return blocks, tx, rx, report


def _seed_summary(args):
    raw, seed = args
    cfg = parse_config(raw)
    _, _, _, report = _link_once(cfg, seed, cfg.prefix)
    return {"seed": seed, "max_abs_error": report.max_abs_error, "evm_rms": report.evm_rms}


def run_link(cfg: ScenarioConfig, parallel_seeds: int = 1):
    out = Outputs(cfg.name)
    seeds = cfg.channel.seeds if cfg.channel.kind == "rician" else (0,)
    first = seeds[0]
    blocks, tx, rx, report = _link_once(cfg, first, cfg.prefix)

    out.add("tx_waveform.csv", waveform_csv(tx.times, tx.samples), WAVEFORM_COLUMNS,
            f"transmitted stream, prefix {cfg.prefix.kind.value} L={cfg.prefix.L}")
    out.add("rx_waveform.csv", waveform_csv(rx.times, rx.samples), WAVEFORM_COLUMNS,
            "received stream after the channel")
    if cfg.also_without_prefix and cfg.prefix.L:
        _, tx0, rx0, _ = _link_once(cfg, first, pipeline.NO_PREFIX)
        out.add("tx_waveform_noprefix.csv", waveform_csv(tx0.times, tx0.samples), WAVEFORM_COLUMNS,
                "transmitted stream without prefix")
        out.add("rx_waveform_noprefix.csv", waveform_csv(rx0.times, rx0.samples), WAVEFORM_COLUMNS,
                "received stream without prefix")
    rows = []
    for b, r in zip(blocks, report.recovered_blocks):
        err = np.abs(r.symbols - b.symbols)
        for n in range(cfg.N):
            x, y = b.symbols[n], r.symbols[n]
            rows.append((b.block_index, n, x.real, x.imag, y.real, y.imag, err[n]))
    out.add("symbols.csv", csv_text(SYMBOL_COLUMNS, rows), SYMBOL_COLUMNS,
            "transmitted and recovered symbols per block")
    real = _channel_realization(cfg, first)
    out.add("channel.json", json_text(real.to_dict()), description="channel taps of the first seed")

    result = {"link": report.to_dict(), "channel_seed": first}
    if len(seeds) > 1:
        jobs = [(cfg.raw, s) for s in seeds]
        if parallel_seeds > 1:
            with ProcessPoolExecutor(max_workers=parallel_seeds) as pool:
                per_seed = list(pool.map(_seed_summary, jobs))
        else:
            per_seed = [_seed_summary(j) for j in jobs]
        result["monte_carlo"] = {
            "seeds": per_seed,
            "worst_max_abs_error": max(r["max_abs_error"] for r in per_seed),
        }
    return out, result


def run_subcarriers(cfg: ScenarioConfig):
    out = Outputs(cfg.name)
    block = scenario_blocks(cfg)[0]
    seq = conventional.modulate_continuous(block, cfg.oversampling)
    t = seq.times
    for n in range(cfg.N):
        out.add(f"subcarrier{n}_waveform.csv", waveform_csv(t, conventional.subcarrier_waveform(block, n, t)),
                WAVEFORM_COLUMNS, f"windowed, symbol-weighted subcarrier {n}")
    out.add("waveform.csv", waveform_csv(t, seq.samples), WAVEFORM_COLUMNS, "OFDM block (sum of subcarriers)")
    T0 = block.T0
    f = np.linspace(-2 / T0, (cfg.N + 1) / T0, cfg.spectrum_points)
    for n in range(cfg.N):
        single = np.zeros(cfg.N, dtype=complex)
        single[n] = block.symbols[n]
        out.add(f"subcarrier{n}_spectrum.csv",
                csv_text(SPECTRUM_COLUMNS, zip(f, *_reim(conventional.spectrum(SymbolBlock(single, cfg.Ts), f)))),
                SPECTRUM_COLUMNS, f"spectrum of subcarrier {n}")
    spec = conventional.spectrum(block, f)
    out.add("spectrum.csv", csv_text(SPECTRUM_COLUMNS, zip(f, *_reim(spec))), SPECTRUM_COLUMNS,
            "spectrum of the OFDM block")
    at_carriers = conventional.spectrum(block, np.arange(cfg.N) / T0)
    return out, {"spectrum_at_subcarriers": np.abs(at_carriers).tolist(), "T0": T0}


def _reim(z):
    z = np.asarray(z, dtype=complex)
    return z.real, z.imag


def _rtft_block_waveform(cfg, block):
    tx = design.tx_params(cfg.profile)
    lo, hi = rtft.output_window(tx.mapping, cfg.Ts)
    n_pts = cfg.N * cfg.oversampling + 1
    grid = np.linspace(lo, hi, n_pts)
    dac = ComplexSequence(block.symbols, cfg.Ts, 0.0)
    return grid, rtft.rtft_sequence(dac, tx.mapping, grid)


def run_rtft_generation(cfg: ScenarioConfig):
    out = Outputs(cfg.name)
    block = scenario_blocks(cfg)[0]
    out.add("symbols_in.csv",
            csv_text(("n", "re", "im"), [(n, x.real, x.imag) for n, x in enumerate(block.symbols)]),
            ("n", "re", "im"), "transmitted symbols")
    grid, wave = _rtft_block_waveform(cfg, block)
    out.add("waveform.csv", waveform_csv(grid, wave), WAVEFORM_COLUMNS, "RTFT output on the output window")
    out.add("waveform_normalized.csv", waveform_csv(grid, rtft.normalize_components(wave)), WAVEFORM_COLUMNS,
            "plot-only normalization: real and imaginary parts scaled separately")
    disc = pipeline.tx_payload(block, pipeline.SystemKind.RtftIdeal, cfg.profile)
    closed = rtft.rtft_ofdm_discrete(block)
    t_k = cfg.profile.tx_window_start + np.arange(cfg.N) * cfg.Ts
    out.add("samples.csv", waveform_csv(t_k, disc), WAVEFORM_COLUMNS, "RTFT output sampled at the symbol rate")
    lo, hi = grid[0], grid[-1]
    return out, {
        "output_window_s": [lo, hi],
        "closed_form_max_abs_diff": float(np.max(np.abs(disc - closed))),
    }


def run_idft_vs_rtft(cfg: ScenarioConfig):
    out = Outputs(cfg.name)
    block = scenario_blocks(cfg)[0]
    x_idft = conventional.modulate_discrete(block)
    x_rtft = rtft.rtft_ofdm_discrete(block)
    k_t = np.arange(cfg.N) * cfg.Ts
    out.add("idft_samples.csv", waveform_csv(k_t, rtft.normalize_peak(x_idft)), WAVEFORM_COLUMNS,
            "peak-normalized IDFT-OFDM samples")
    out.add("rtft_samples.csv", waveform_csv(k_t, rtft.normalize_peak(x_rtft)), WAVEFORM_COLUMNS,
            "peak-normalized RTFT-OFDM samples")
    grid, wave = _rtft_block_waveform(cfg, block)
    out.add("rtft_waveform.csv", waveform_csv(grid, rtft.normalize_peak(wave)), WAVEFORM_COLUMNS,
            "peak-normalized continuous RTFT output")
    conv = conventional.modulate_continuous(block, cfg.oversampling)
    out.add("idft_waveform.csv", waveform_csv(conv.times, rtft.normalize_peak(conv.samples)), WAVEFORM_COLUMNS,
            "peak-normalized continuous conventional OFDM block")
    report = {}
    if cfg.N % 2 == 0:
        shifted = np.roll(rtft.normalize_peak(x_idft), -cfg.N // 2)
        report["half_block_shift_max_abs_error"] = float(np.max(np.abs(rtft.normalize_peak(x_rtft) - shifted)))
    return out, report


def run_group_delay(cfg: ScenarioConfig):
    out = Outputs(cfg.name)
    prof = cfg.profile
    for side, is_tx in (("tx", True), ("rx", False)):
        f, tau = design.group_delay_line(prof, cfg.spectrum_points, tx=is_tx)
        out.add(f"{side}_group_delay.csv", csv_text(GROUP_DELAY_COLUMNS, zip(f, tau)), GROUP_DELAY_COLUMNS,
                f"{side} phaser group delay against baseband frequency")
    rep = design.feasibility(prof)
    result = {
        "tx_params": _params_dict(design.tx_params(prof)),
        "rx_params": _params_dict(design.rx_params(design.tx_params(prof))),
        "feasibility": rep.to_dict(),
    }
    if cfg.band:
        result["band"] = band_summary(cfg.band, cfg.Ts)
    return out, result


def _params_dict(p):
    return {"phi0": p.phi0, "phi1": p.phi1, "phi2": p.phi2, "omega_c": p.omega_c}


def band_summary(name: str, Ts: float) -> dict:
    b = design.band_preset(name)
    return {
        "name": b.name,
        "carrier_hz": b.carrier_hz,
        "max_Ts": b.max_Ts,
        "description": b.description,
        "Ts_within_band_limit": bool(Ts <= b.max_Ts),
    }


RUNNERS = {
    "link": run_link,
    "subcarriers": run_subcarriers,
    "rtft_generation": run_rtft_generation,
    "idft_vs_rtft": run_idft_vs_rtft,
    "group_delay": run_group_delay,
}


def run_scenario(cfg: ScenarioConfig, parallel_seeds: int = 1) -> dict:
    """Run ``cfg`` and return ``{file name: text}`` including report and manifest."""
    if cfg.experiment == "link":
        out, result = run_link(cfg, parallel_seeds)
    else:
        out, result = RUNNERS[cfg.experiment](cfg)
    report = {
        "format_version": FORMAT_VERSION,
        "scenario": cfg.name,
        "figure": cfg.figure,
        "experiment": cfg.experiment,
        "config": cfg.raw,
        "results": result,
    }
    return out.finish(report)
