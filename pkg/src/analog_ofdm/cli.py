"""Command-line front end: ``analog-ofdm run|presets|design``.

Exit status: 0 success, 1 config parse error, 2 validation error,
3 simulation error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import design, scenario
from .errors import AnalogOfdmError

EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_RUNTIME = 3
OUT_DIR_ENV = "ANALOG_OFDM_OUT_DIR"
DEFAULT_OUT_DIR = "analog_ofdm_out"


def _resolve_config_text(target: str) -> str:
    path = Path(target)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    try:
        return scenario.preset_text(target)
    except KeyError:
        raise scenario.ConfigParseError(
            "config", f"{target!r} is neither a readable file nor a bundled preset"
        ) from None


def _output_dir(cfg: scenario.ScenarioConfig, override: str | None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(OUT_DIR_ENV)
    if env:
        return Path(env)
    return Path(cfg.output_dir or DEFAULT_OUT_DIR)


def cmd_run(args) -> int:
    try:
        cfg = scenario.load_config(_resolve_config_text(args.config))
    except scenario.ConfigParseError as exc:
        print(f"error: config parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except scenario.ConfigValidationError as exc:
        print(f"error: invalid config: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        files = scenario.run_scenario(cfg, parallel_seeds=args.parallel_seeds)
    except AnalogOfdmError as exc:
        print(f"error: simulation failed: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    out_dir = _output_dir(cfg, args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out_dir / name).write_text(text, encoding="utf-8", newline="\n")
    print(f"{cfg.name}: wrote {len(files)} files to {out_dir}")
    return 0


def cmd_presets(args) -> int:
    rows = scenario.list_presets()
    w_name = max(len(r[0]) for r in rows)
    w_fig = max(len(r[1]) for r in rows)
    for name, fig, desc in rows:
        print(f"{name:<{w_name}}  {fig:<{w_fig}}  {desc}")
    return 0


def cmd_design(args) -> int:
    try:
        profile = design.OfdmProfile(args.n, args.ts, args.phi1_case, args.phi2_sign)
        band = scenario.band_summary(args.band, args.ts) if args.band else None
        report = design.feasibility(profile, args.bandwidth)
    except (AnalogOfdmError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    tx = design.tx_params(profile)
    rx = design.rx_params(tx)
    payload = {
        "N": profile.N,
        "Ts": profile.Ts,
        "phi1_case": profile.phi1_case.value,
        "phi2_sign": profile.phi2_sign.value,
        "tx": scenario._params_dict(tx),
        "rx": scenario._params_dict(rx),
        "feasibility": report.to_dict(),
    }
    if band:
        payload["band"] = band
    if not args.json:
        f = lambda v: format(float(v), ".6g")
        print(f"N = {profile.N}, Ts = {f(profile.Ts)} s, T0 = {f(profile.T0)} s")
        print(f"tx phaser: phi1 = {f(tx.phi1)} s, phi2 = {f(tx.phi2)} s^2/rad, omega_c = {f(tx.omega_c)} rad/s")
        print(f"rx phaser: phi1 = {f(rx.phi1)} s, phi2 = {f(rx.phi2)} s^2/rad")
        print(f"|phi2| = {f(report.phi2_magnitude)} s^2/rad")
        print(f"delay swing over {f(report.bandwidth)} Hz = {f(report.delay_swing)} s")
        print(f"center delay = {f(report.center_delay)} s")
        if band:
            ok = "within" if band["Ts_within_band_limit"] else "above"
            print(f"band {band['name']} ({band['description']}): Ts {ok} the {f(band['max_Ts'])} s limit")
        print(f"verdict: {'practical' if report.practical else 'impractical'}")
        for note in report.notes:
            print(f"  note: {note}")
    print(scenario.json_text(payload), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="analog-ofdm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a scenario config file or bundled preset")
    r.add_argument("config", help="path to a JSON config, or a preset name")
    r.add_argument("--out-dir", default=None, help=f"output directory (overrides ${OUT_DIR_ENV})")
    r.add_argument("--parallel-seeds", type=int, default=1, metavar="K",
                   help="spread Monte Carlo channel seeds over K worker processes")
    r.set_defaults(func=cmd_run)

    ps = sub.add_parser("presets", help="list bundled presets")
    ps.set_defaults(func=cmd_presets)

    d = sub.add_parser("design", help="derive phaser parameters and check feasibility")
    d.add_argument("--n", type=int, required=True, help="number of subcarriers")
    d.add_argument("--ts", type=float, required=True, help="symbol period [s]")
    d.add_argument("--band", default=None, help=f"band preset: {', '.join(design.BAND_PRESETS)}")
    d.add_argument("--bandwidth", type=float, default=None, help="bandwidth [Hz] (default 1/Ts)")
    d.add_argument("--phi1-case", default="PhaseAligned", choices=[c.value for c in design.Phi1Case])
    d.add_argument("--phi2-sign", default="Plus", choices=[c.value for c in design.Phi2Sign])
    d.add_argument("--json", action="store_true", help="print only the JSON report")
    d.set_defaults(func=cmd_design)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "parallel_seeds", 1) < 1:
        print("error: --parallel-seeds must be >= 1", file=sys.stderr)
        return EXIT_VALIDATION
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
