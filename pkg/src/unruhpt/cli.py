"""Command-line interface: parameter sweeps to CSV/PNG and the verify report.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 I/O error,
4 verification failure (hard checks only).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    IoError,
    NotHermitianError,
    SingularEvolutionError,
    UnknownPresetError,
)
from .linalg import Subsystem, swap_subsystems
from .plotting import render_curves
from .presets import (
    DEFAULT_STEPS,
    DEFAULT_T_MAX,
    PANEL_ALPHAS,
    curve_filename,
    curve_label,
    figure_preset,
    preset_names,
)
from .ptsym import PTParams, PTTarget, ResidualEntry, VerificationReport, verify_closed_forms
from .sweep import MEASURE_NAMES, SweepSpec, emit_csv, run_sweep
from .unruh import (
    R_MAX,
    AccelerationSpec,
    Scenario,
    accelerate,
    bell_phi_plus,
    reference_both_accelerated,
    reference_single_accelerated,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


_SCENARIOS = {"first-only": Scenario.FIRST_ONLY, "both": Scenario.BOTH}
_PT_TARGETS = {"none": None, "on-a": PTTarget.ON_A, "on-b": PTTarget.ON_B, "on-both": PTTarget.ON_BOTH}
_PARTIES = {"a": Subsystem.A, "b": Subsystem.B}

_CONFIG_KEYS = ("steps", "out", "t-max", "measured-party", "plot")


def _read_config(path: Path) -> dict[str, str]:
    """Parse `key = value` lines; unknown keys are loud usage errors."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise IoError(f"cannot read config {path}: {err}") from err
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected `key = value`, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = value.strip()
    return values


def _pick(cli_value, config: dict[str, str], key: str, convert, default):
    if cli_value is not None:
        return cli_value
    if key in config:
        try:
            return convert(config[key])
        except (ValueError, KeyError) as err:
            raise UsageError(f"bad config value for {key!r}: {config[key]!r} ({err})") from err
    return default


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="unruhpt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a parameter sweep and write CSV (and PNG) output")
    sweep.add_argument("--preset", help="figure preset name (see `presets`)")
    sweep.add_argument("--scenario", choices=sorted(_SCENARIOS), help="which qubits are accelerated")
    sweep.add_argument("--pt", choices=list(_PT_TARGETS), help="operator placement (default none)")
    sweep.add_argument("--alpha", type=float, help="operator strength in radians")
    sweep.add_argument("--sweep", choices=("r", "t"), help="swept variable")
    sweep.add_argument("--fixed-r", type=float, help="acceleration held fixed when sweeping t")
    sweep.add_argument("--fixed-t", type=float, help="interaction time held fixed when sweeping r")
    sweep.add_argument("--measures", help="comma list from: negativity,naqc")
    sweep.add_argument("--steps", type=int, help=f"grid points per curve (default {DEFAULT_STEPS})")
    sweep.add_argument("--out", help="output directory (default .)")
    sweep.add_argument("--t-max", type=float, help=f"t sweep upper end (default {DEFAULT_T_MAX})")
    sweep.add_argument("--measured-party", choices=("a", "b"), help="party measured in the advantage protocol")
    sweep.add_argument("--plot", action=argparse.BooleanOptionalAction, default=None,
                       help="render a PNG alongside the CSV (default on)")
    sweep.add_argument("--config", type=Path, help="optional `key = value` config file; flags win")
    sweep.set_defaults(func=_cmd_sweep)

    verify = sub.add_parser("verify", help="write the closed-form cross-check report")
    verify.add_argument("--out", default="verify_report.txt", help="report file path")
    verify.set_defaults(func=_cmd_verify)

    presets = sub.add_parser("presets", help="list figure preset names")
    presets.set_defaults(func=_cmd_presets)
    return parser


def _cmd_presets(args: argparse.Namespace) -> int:
    for name in preset_names():
        print(name)
    return 0


def _custom_spec(args: argparse.Namespace, steps: int, t_max: float, party: Subsystem) -> SweepSpec:
    if args.scenario is None or args.sweep is None:
        raise UsageError("custom sweeps need --scenario and --sweep (or use --preset)")
    scenario = _SCENARIOS[args.scenario]
    pt = _PT_TARGETS[args.pt or "none"]
    if pt is not None and args.alpha is None:
        raise UsageError("--alpha is required when --pt is not none")
    if args.sweep == "r":
        start, end = 0.0, R_MAX
        fixed = args.fixed_t if args.fixed_t is not None else 0.0
    else:
        start, end = 0.0, t_max
        fixed = args.fixed_r if args.fixed_r is not None else 0.0
    measures = tuple((args.measures or "negativity,naqc").split(","))
    if any(m not in MEASURE_NAMES for m in measures):
        raise UsageError(f"--measures must be a comma list from {MEASURE_NAMES}")
    return SweepSpec(
        scenario=scenario,
        pt_target=pt,
        alpha=args.alpha if args.alpha is not None else 0.0,
        sweep_variable=args.sweep,
        fixed_value=fixed,
        range_start=start,
        range_end=end,
        steps=steps,
        measures=measures,
        measured_party=party,
    )


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _read_config(args.config) if args.config else {}
    steps = _pick(args.steps, config, "steps", int, DEFAULT_STEPS)
    out_dir = Path(_pick(args.out, config, "out", str, "."))
    t_max = _pick(args.t_max, config, "t-max", float, DEFAULT_T_MAX)
    party = _PARTIES[_pick(args.measured_party, config, "measured-party", str, "a")]
    plot = _pick(args.plot, config, "plot", _parse_bool, True)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as err:
        raise IoError(f"cannot create output directory {out_dir}: {err}") from err

    if args.preset:
        name = args.preset
        specs = figure_preset(name, steps=steps, t_max=t_max, measured_party=party)
    else:
        name = None
        specs = [_custom_spec(args, steps, t_max, party)]

    curves = []
    for spec in specs:
        records = run_sweep(spec)
        if name is not None:
            filename = curve_filename(name, spec)
        else:
            pt_label = spec.pt_target.value if spec.pt_target else "none"
            filename = f"sweep_{spec.scenario.value}_{pt_label}_{spec.sweep_variable}.csv"
        path = out_dir / filename
        emit_csv(records, path)
        print(f"wrote {path} ({len(records)} rows)")
        curves.append((curve_label(spec), spec, records))
    if plot:
        png = out_dir / f"{name or 'sweep'}.png"
        render_curves(curves, png, title=name or "sweep")
        print(f"wrote {png}")
    return 0


def _channel_entries(r_grid: np.ndarray) -> list[ResidualEntry]:
    """Acceleration channel vs the closed-form matrices.

    The one-accelerated matrix is compared both as tabulated and modulo a
    swap of the middle basis slots, because its damped population sits on
    the opposite slot from what the channel on qubit A produces.
    """
    bell = bell_phi_plus()
    entries: list[ResidualEntry] = []
    for r in r_grid:
        r = float(r)
        single = accelerate(bell, AccelerationSpec(r, Scenario.FIRST_ONLY)).rho
        ref_single = reference_single_accelerated(r)
        res_direct = float(np.max(np.abs(single - ref_single)))
        res_swapped = float(np.max(np.abs(swap_subsystems(single) - ref_single)))
        entries.append(ResidualEntry("one_acc_channel", r, None, None, res_direct))
        entries.append(ResidualEntry("one_acc_channel_swap", r, None, None, res_swapped))
        both = accelerate(bell, AccelerationSpec(r, Scenario.BOTH)).rho
        res_both = float(np.max(np.abs(both - reference_both_accelerated(r))))
        entries.append(ResidualEntry("both_acc_channel", r, None, None, res_both, hard=True))
    return entries


def build_verification_report(
    channel_r_steps: int = 50,
    closed_form_r_steps: int = 10,
    t_steps: int = 10,
    t_max: float = DEFAULT_T_MAX,
) -> VerificationReport:
    channel = _channel_entries(np.linspace(0.0, R_MAX, channel_r_steps))
    params = [
        PTParams(alpha, float(t))
        for alpha in PANEL_ALPHAS.values()
        for t in np.linspace(0.0, t_max, t_steps)
    ]
    closed = verify_closed_forms(np.linspace(0.0, R_MAX, closed_form_r_steps), params)
    return VerificationReport(channel + closed.entries, threshold=closed.threshold)


def run_verify(report_path: Path | str) -> int:
    """Write the residual report; 0 when all hard checks pass, else 4."""
    report = build_verification_report()
    text = report.render()
    try:
        with open(report_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as err:
        raise IoError(f"cannot write report {report_path}: {err}") from err
    for line in text.splitlines():
        if line.startswith(("closed-form", "hard threshold", "summary", "  [", "overall")):
            print(line)
    print(f"full table written to {report_path}")
    return 0 if report.hard_ok else 4


def _cmd_verify(args: argparse.Namespace) -> int:
    return run_verify(args.out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, UnknownPresetError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except (DomainError, SingularEvolutionError, OverflowError, NotHermitianError, ConvergenceError) as err:
        print(f"domain error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
