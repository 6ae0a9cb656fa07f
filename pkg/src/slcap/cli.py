"""Command-line front end.

Subcommands: ``analyze`` (impedance + loss metrics from a Touchstone file),
``match`` (matching-network design and VSWR evaluation), ``pattern`` (array
far-field grid, cut, lobes, directivity), ``rssi`` (field-log comparison) and
``synth`` (reference series-RLC sweep generator).

Exit codes: 0 on success, 2 for input problems (file/parse/config errors, each
with a line-numbered diagnostic where applicable), 1 for numeric failures
inside the computation.  All outputs are deterministic: rerunning a command
writes byte-identical files.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .impedance import (
    FIXTURE_MODES,
    REFLECTION,
    SERIES_THROUGH,
    ImpedanceProfile,
    SeriesRlcModel,
    impedance_at,
    impedance_profile,
    synthesize_series_rlc,
)
from .matching import (
    L_SECTION,
    SERIES_RESISTOR,
    apply_match,
    design_l_section,
    design_series_resistive_match,
    power_split_report,
    vswr_profile,
)
from .metrics import REACTANCE_EPSILON, metrics_report
from .radiation import (
    ArrayLayout,
    ElementModel,
    directivity,
    evaluate_pattern,
    find_lobes,
    gain,
    make_grid,
    polar_cut,
)
from .rssi import (
    AtLogParseError,
    compare_datasets,
    parse_at_csq_log,
    parse_rssi_csv,
    rssi_to_dbm,
)
from .svgplot import line_plot_svg
from .touchstone import (
    ENCODINGS,
    UNIT_SCALE,
    TouchstoneFormat,
    TouchstoneParseError,
    parse_touchstone,
    validate_passivity,
    write_touchstone,
)

__all__ = ["RunConfig", "InputError", "load_config", "run_command", "main"]


class InputError(ValueError):
    """User-input problem (bad file, bad config, bad option value): exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Run-wide settings; file values override defaults, CLI flags override both."""

    z0_ohm: float = 50.0
    fixture: str = SERIES_THROUGH
    out_dir: str = "."
    theta_step_deg: float = 1.0
    phi_step_deg: float = 1.0
    df_threshold: float = 0.02
    z_threshold_ohm: float = 3.0
    lobe_db_down: float = 10.0
    reactance_epsilon_ohm: float = REACTANCE_EPSILON

    def __post_init__(self):
        for name in (
            "z0_ohm",
            "theta_step_deg",
            "phi_step_deg",
            "df_threshold",
            "z_threshold_ohm",
            "lobe_db_down",
            "reactance_epsilon_ohm",
        ):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise InputError(f"config value {name} must be positive")
        if self.fixture not in FIXTURE_MODES:
            raise InputError(f"config value fixture must be one of {FIXTURE_MODES}")


_CONFIG_FLOAT_KEYS = (
    "z0_ohm",
    "theta_step_deg",
    "phi_step_deg",
    "df_threshold",
    "z_threshold_ohm",
    "lobe_db_down",
    "reactance_epsilon_ohm",
)
_CONFIG_STR_KEYS = ("fixture", "out_dir")


def load_config(path: str | Path) -> RunConfig:
    """Read a plain ``key = value`` config file; unknown keys are rejected."""
    values: dict[str, object] = {}
    text = Path(path).read_text()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}: line {line_number}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _CONFIG_FLOAT_KEYS:
            try:
                values[key] = float(value)
            except ValueError:
                raise InputError(
                    f"{path}: line {line_number}: {key} needs a number, got {value!r}"
                ) from None
        elif key in _CONFIG_STR_KEYS:
            values[key] = value
        else:
            raise InputError(f"{path}: line {line_number}: unknown key {key!r}")
    return RunConfig(**values)


def _effective_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    overrides = {}
    if args.z0 is not None:
        overrides["z0_ohm"] = args.z0
    if args.fixture is not None:
        overrides["fixture"] = args.fixture
    if args.out_dir is not None:
        overrides["out_dir"] = args.out_dir
    for attr, key in (
        ("theta_step", "theta_step_deg"),
        ("phi_step", "phi_step_deg"),
        ("df_threshold", "df_threshold"),
        ("z_threshold", "z_threshold_ohm"),
        ("lobe_db", "lobe_db_down"),
    ):
        if getattr(args, attr, None) is not None:
            overrides[key] = getattr(args, attr)
    if overrides:
        cfg = replace(cfg, **overrides)
    return cfg


# ---------------------------------------------------------------------------
# CSV and report emission


def _num(v) -> str:
    return f"{float(v):.9g}"


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)


def write_impedance_csv(path: Path, profile: ImpedanceProfile) -> None:
    rows = (
        (_num(f), _num(z.real), _num(z.imag), _num(abs(z)))
        for f, z in zip(profile.frequencies_hz, profile.z)
    )
    _write_csv(path, ["freq_hz", "re_z_ohm", "im_z_ohm", "mag_z_ohm"], rows)


def write_metrics_csv(path: Path, metrics) -> None:
    rows = (
        (_num(f), _num(r), _num(x), _num(d), _num(e), _num(q))
        for f, r, x, d, e, q in zip(
            metrics.frequencies_hz,
            metrics.esr_ohm,
            metrics.reactance_ohm,
            metrics.df,
            metrics.efficiency,
            metrics.q,
        )
    )
    _write_csv(path, ["freq_hz", "esr_ohm", "reactance_ohm", "df", "efficiency", "q"], rows)


def write_vswr_csv(path: Path, vswr) -> None:
    rows = (
        (_num(f), _num(g.real), _num(g.imag), _num(abs(g)), _num(s))
        for f, g, s in zip(vswr.frequencies_hz, vswr.gamma, vswr.vswr)
    )
    _write_csv(path, ["freq_hz", "re_gamma", "im_gamma", "mag_gamma", "vswr"], rows)


def write_pattern_csv(path: Path, pattern) -> None:
    u_max = pattern.u.max()
    with np.errstate(divide="ignore"):
        u_db = 10.0 * np.log10(pattern.u / u_max)
    rows = (
        (
            _num(math.degrees(pattern.theta_rad[i])),
            _num(math.degrees(pattern.phi_rad[j])),
            _num(pattern.u[i, j]),
            _num(u_db[i, j]),
        )
        for i in range(pattern.theta_rad.size)
        for j in range(pattern.phi_rad.size)
    )
    _write_csv(path, ["theta_deg", "phi_deg", "u", "u_db"], rows)


def write_cut_csv(path: Path, angles_rad: np.ndarray, values: np.ndarray) -> None:
    peak = values.max()
    with np.errstate(divide="ignore"):
        u_db = 10.0 * np.log10(values / peak)
    rows = (
        (_num(math.degrees(a)), _num(d)) for a, d in zip(angles_rad, u_db)
    )
    _write_csv(path, ["theta_deg", "u_db"], rows)


def write_lobes_csv(path: Path, lobes) -> None:
    rows = (
        (
            _num(math.degrees(lobe.angle_rad)),
            _num(lobe.level),
            _num(lobe.level_db),
            "main" if lobe.is_main else "minor",
        )
        for lobe in lobes
    )
    _write_csv(path, ["angle_deg", "level", "level_db", "kind"], rows)


def write_rssi_csv(path: Path, dataset) -> None:
    rows = (
        (
            s.timestamp.isoformat(),
            str(s.rssi),
            _num(rssi_to_dbm(s.rssi)) if s.known else "nan",
        )
        for s in dataset.samples
    )
    _write_csv(path, ["timestamp", "rssi", "dbm"], rows)


def _emit_report(path: Path, rows: list[tuple[str, str]]) -> str:
    text = "\n".join(f"{key} = {value}" for key, value in rows) + "\n"
    path.write_text(text)
    return text


def _read_input(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    return p.read_text()


# ---------------------------------------------------------------------------
# Subcommands


def _profile_from_file(path: str, cfg: RunConfig):
    net = parse_touchstone(_read_input(path))
    for warning in validate_passivity(net):
        print(f"warning: {warning}", file=sys.stderr)
    try:
        return impedance_profile(net, mode=cfg.fixture)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_analyze(args: argparse.Namespace, cfg: RunConfig) -> int:
    profile = _profile_from_file(args.s_file, cfg)
    metrics = metrics_report(
        profile,
        df_threshold=cfg.df_threshold,
        z_threshold_ohm=cfg.z_threshold_ohm,
        reactance_epsilon=cfg.reactance_epsilon_ohm,
    )
    out = Path(cfg.out_dir)
    write_impedance_csv(out / "impedance.csv", profile)
    write_metrics_csv(out / "metrics.csv", metrics)

    res = metrics.resonance
    rows = [
        ("n_points", str(profile.n_points)),
        ("fixture", cfg.fixture),
        ("resonance_reactance_zero_hz", _opt_num(res.reactance_zero_hz)),
        ("resonance_min_magnitude_hz", _opt_num(res.min_magnitude_hz)),
        ("resonant_frequency_hz", _opt_num(metrics.resonant_frequency_hz)),
        ("bandwidth_low_hz", _opt_num(metrics.bandwidth_hz and metrics.bandwidth_hz[0])),
        ("bandwidth_high_hz", _opt_num(metrics.bandwidth_hz and metrics.bandwidth_hz[1])),
        ("z_threshold_ohm", _num(cfg.z_threshold_ohm)),
        ("df_threshold", _num(cfg.df_threshold)),
        ("fraction_df_below", _num(metrics.fraction_df_below)),
        ("fraction_df_undefined", _num(metrics.fraction_df_undefined)),
    ]
    print(_emit_report(out / "analyze_report.txt", rows), end="")
    if args.svg:
        svg = line_plot_svg(
            profile.frequencies_hz,
            [("|Z| (ohm)", profile.magnitude)],
            xlabel="frequency (Hz)",
            ylabel="|Z| (ohm)",
        )
        (out / "impedance.svg").write_text(svg)
    return 0


def _opt_num(v) -> str:
    return "none" if v is None else _num(v)


def cmd_match(args: argparse.Namespace, cfg: RunConfig) -> int:
    profile = _profile_from_file(args.s_file, cfg)
    f = profile.frequencies_hz
    if not f[0] <= args.f_design <= f[-1]:
        raise InputError(
            f"--f-design {args.f_design:g} Hz is outside the sweep "
            f"[{f[0]:g}, {f[-1]:g}] Hz"
        )
    out = Path(cfg.out_dir)
    unmatched = vswr_profile(profile, z0=cfg.z0_ohm)

    if args.topology == SERIES_RESISTOR:
        network = design_series_resistive_match(profile, args.f_design, z0=cfg.z0_ohm)
        networks = [network]
    else:
        z_load = impedance_at(profile, args.f_design)
        low, high = design_l_section(z_load, args.f_design, z0=cfg.z0_ohm)
        networks = [low, high]
        network = low if args.variant == "low-pass" else high

    matched_profile = apply_match(profile, network)
    matched = vswr_profile(matched_profile, z0=cfg.z0_ohm)
    split = power_split_report(profile, network, z0=cfg.z0_ohm)

    write_vswr_csv(out / "vswr_unmatched.csv", unmatched)
    write_vswr_csv(out / "vswr_matched.csv", matched)
    write_impedance_csv(out / "impedance_matched.csv", matched_profile)

    rows = [
        ("topology", network.topology),
        ("f_design_hz", _num(args.f_design)),
        ("z0_ohm", _num(cfg.z0_ohm)),
    ]
    if network.topology == SERIES_RESISTOR:
        rows.append(("series_r_ohm", _num(network.series_r_ohm)))
    else:
        rows.append(("variant", network.variant))
        for net in networks:
            tag = net.variant.replace("-", "_")
            rows.extend(
                [
                    (f"{tag}.series_x_ohm", _num(net.series_x_ohm)),
                    (f"{tag}.shunt_x_ohm", _num(net.shunt_x_ohm)),
                    (f"{tag}.series_l_h", _opt_num(net.series_l_h)),
                    (f"{tag}.series_c_f", _opt_num(net.series_c_f)),
                    (f"{tag}.shunt_l_h", _opt_num(net.shunt_l_h)),
                    (f"{tag}.shunt_c_f", _opt_num(net.shunt_c_f)),
                ]
            )
    rows.extend(
        [
            ("vswr_unmatched_at_f_design", _num(unmatched.at(args.f_design))),
            ("vswr_matched_at_f_design", _num(matched.at(args.f_design))),
            (
                "antenna_fraction_at_f_design",
                _num(np.interp(args.f_design, f, split.antenna_fraction)),
            ),
            (
                "mismatch_loss_db_at_f_design",
                _num(np.interp(args.f_design, f, split.mismatch_loss_db)),
            ),
        ]
    )
    print(_emit_report(out / "match_report.txt", rows), end="")
    if args.svg:
        svg = line_plot_svg(
            f,
            [("unmatched", unmatched.vswr), ("matched", matched.vswr)],
            xlabel="frequency (Hz)",
            ylabel="VSWR",
        )
        (out / "vswr.svg").write_text(svg)
    return 0


def _layout_from_file(path: str) -> ArrayLayout:
    try:
        doc = json.loads(_read_input(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: layout must be a JSON object")
    missing = {"frequency_hz", "positions"} - doc.keys()
    if missing:
        raise InputError(f"{path}: missing layout keys: {', '.join(sorted(missing))}")
    known = {"frequency_hz", "positions", "weights", "element"}
    unknown = doc.keys() - known
    if unknown:
        raise InputError(f"{path}: unknown layout keys: {', '.join(sorted(unknown))}")

    element = ElementModel()
    if "element" in doc:
        spec = doc["element"]
        if not isinstance(spec, dict):
            raise InputError(f"{path}: element must be a JSON object")
        kwargs = {}
        if "kind" in spec:
            kwargs["kind"] = spec["kind"]
        if "axis" in spec:
            kwargs["axis"] = tuple(spec["axis"])
        if "footprint_mm" in spec:
            kwargs["footprint_mm"] = tuple(spec["footprint_mm"])
        extra = spec.keys() - {"kind", "axis", "footprint_mm"}
        if extra:
            raise InputError(f"{path}: unknown element keys: {', '.join(sorted(extra))}")
        try:
            element = ElementModel(**kwargs)
        except (ValueError, TypeError) as exc:
            raise InputError(f"{path}: {exc}") from None

    positions = doc["positions"]
    weights = doc.get("weights")
    if weights is None:
        weights = [1.0] * len(positions)
    parsed_weights = []
    for w in weights:
        if isinstance(w, (int, float)):
            parsed_weights.append(complex(w))
        elif isinstance(w, list) and len(w) == 2:
            parsed_weights.append(complex(w[0], w[1]))
        else:
            raise InputError(f"{path}: weights must be numbers or [re, im] pairs")
    try:
        return ArrayLayout(
            positions_m=np.asarray(positions, dtype=float),
            weights=np.asarray(parsed_weights, dtype=complex),
            frequency_hz=float(doc["frequency_hz"]),
            element=element,
        )
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_pattern(args: argparse.Namespace, cfg: RunConfig) -> int:
    layout = _layout_from_file(args.layout)
    if not 0.0 <= args.efficiency <= 1.0:
        raise InputError(f"--efficiency must be within [0, 1], got {args.efficiency:g}")
    theta, phi = make_grid(cfg.theta_step_deg, cfg.phi_step_deg)
    pattern = evaluate_pattern(layout, theta, phi)
    d = directivity(pattern)
    g = gain(d, args.efficiency)
    phi_cut = math.radians(args.phi_cut_deg)
    lobes = find_lobes(pattern, phi_cut_rad=phi_cut, main_threshold_db=cfg.lobe_db_down)
    angles, values = polar_cut(pattern, phi_cut)

    out = Path(cfg.out_dir)
    write_pattern_csv(out / "pattern.csv", pattern)
    write_cut_csv(out / "cut.csv", angles, values)
    write_lobes_csv(out / "lobes.csv", lobes)

    rows = [
        ("frequency_hz", _num(layout.frequency_hz)),
        ("n_elements", str(layout.n_elements)),
        ("element_kind", layout.element.kind),
        ("theta_step_deg", _num(cfg.theta_step_deg)),
        ("phi_step_deg", _num(cfg.phi_step_deg)),
        ("phi_cut_deg", _num(args.phi_cut_deg)),
        ("directivity", _num(d)),
        ("efficiency", _num(args.efficiency)),
        ("gain", _num(g)),
        ("main_lobe_threshold_db", _num(-cfg.lobe_db_down)),
        ("n_lobes", str(len(lobes))),
        ("n_main_lobes", str(sum(1 for lobe in lobes if lobe.is_main))),
    ]
    for i, lobe in enumerate(lobes):
        kind = "degenerate" if lobe.degenerate else ("main" if lobe.is_main else "minor")
        rows.append(
            (f"lobe.{i}", f"{math.degrees(lobe.angle_rad):.3f} deg {lobe.level_db:.3f} dB {kind}")
        )
    print(_emit_report(out / "pattern_report.txt", rows), end="")
    if args.svg:
        peak = values.max()
        with np.errstate(divide="ignore"):
            u_db = 10.0 * np.log10(values / peak)
        svg = line_plot_svg(
            np.degrees(angles),
            [("cut", u_db)],
            xlabel="angle (deg)",
            ylabel="u (dB rel. peak)",
        )
        (out / "cut.svg").write_text(svg)
    return 0


def _parse_claimed(pairs: list[str] | None) -> list[tuple[int, float]]:
    claimed = []
    for item in pairs or []:
        code, sep, dbm = item.partition(":")
        if not sep:
            raise InputError(f"--check-dbm needs CODE:DBM, got {item!r}")
        try:
            claimed.append((int(code), float(dbm)))
        except ValueError:
            raise InputError(f"--check-dbm needs CODE:DBM, got {item!r}") from None
    return claimed


def cmd_rssi(args: argparse.Namespace, cfg: RunConfig) -> int:
    parse = parse_at_csq_log if args.format == "at" else parse_rssi_csv
    try:
        novel = parse(_read_input(args.novel_log), antenna="novel")
    except AtLogParseError as exc:
        raise InputError(f"{args.novel_log}: {exc}") from None
    try:
        baseline = parse(_read_input(args.baseline_log), antenna="baseline")
    except AtLogParseError as exc:
        raise InputError(f"{args.baseline_log}: {exc}") from None

    report = compare_datasets(
        novel,
        baseline,
        novel_area_mm2=args.novel_area_mm2,
        baseline_area_mm2=args.baseline_area_mm2,
        claimed_dbm=_parse_claimed(args.check_dbm),
    )
    out = Path(cfg.out_dir)
    write_rssi_csv(out / "rssi_novel.csv", novel)
    write_rssi_csv(out / "rssi_baseline.csv", baseline)
    _write_csv(out / "comparison.csv", ["key", "value"], report.to_rows())
    (out / "comparison.txt").write_text(report.to_text())
    print(report.to_text(), end="")
    if args.svg:
        known = [s for s in novel.samples if s.known]
        if known:
            svg = line_plot_svg(
                np.arange(len(known)),
                [("novel rssi", np.array([s.rssi for s in known], dtype=float))],
                xlabel="sample",
                ylabel="rssi",
            )
            (out / "rssi.svg").write_text(svg)
    return 0


def _sweep(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep must be start:stop:points")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError("sweep must be start:stop:points") from None
    if not (0 < start < stop) or points < 2:
        raise argparse.ArgumentTypeError(
            "sweep needs 0 < start < stop and at least 2 points"
        )
    return np.linspace(start, stop, points)


def cmd_synth(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        model = SeriesRlcModel(r_ohm=args.r, l_h=args.l, c_f=args.c)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    net = synthesize_series_rlc(model, args.sweep, z0=cfg.z0_ohm, mode=cfg.fixture)
    fmt = TouchstoneFormat(unit=args.unit, encoding=args.encoding, z0_ohm=cfg.z0_ohm)
    default_name = "synth.s1p" if cfg.fixture == REFLECTION else "synth.s2p"
    out_path = Path(cfg.out_dir) / (args.out or default_name)
    out_path.write_text(write_touchstone(net, fmt))
    rows = [
        ("written", str(out_path)),
        ("fixture", cfg.fixture),
        ("n_points", str(net.n_points)),
        ("model_resonance_hz", _opt_num(model.resonant_frequency_hz)),
    ]
    print("\n".join(f"{k} = {v}" for k, v in rows))
    return 0


# ---------------------------------------------------------------------------
# Parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slcap",
        description="Network-parameter analysis for chip-scale capacitive antenna elements.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="key = value settings file")
    parser.add_argument("--out-dir", help="directory for output files (default .)")
    parser.add_argument("--z0", type=float, help="system impedance in ohms (default 50)")
    parser.add_argument(
        "--fixture", choices=FIXTURE_MODES, help="impedance extraction convention"
    )
    parser.add_argument("--svg", action="store_true", help="also write SVG plots")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="impedance profile and loss metrics from a Touchstone file")
    p.add_argument("s_file")
    p.add_argument("--df-threshold", type=float, help="DF band-fraction threshold")
    p.add_argument("--z-threshold", type=float, help="|Z| bandwidth threshold in ohms")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("match", help="design a matching network and evaluate VSWR")
    p.add_argument("s_file")
    p.add_argument("--f-design", type=float, required=True, help="design frequency in Hz")
    p.add_argument(
        "--topology",
        choices=(SERIES_RESISTOR, L_SECTION),
        default=SERIES_RESISTOR,
    )
    p.add_argument(
        "--variant",
        choices=("low-pass", "high-pass"),
        default="low-pass",
        help="which L-section variant to apply",
    )
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("pattern", help="array far-field pattern, cut, lobes, directivity")
    p.add_argument("--layout", required=True, help="JSON layout file")
    p.add_argument("--phi-cut-deg", type=float, default=0.0)
    p.add_argument("--efficiency", type=float, default=1.0)
    p.add_argument("--theta-step", type=float, help="theta grid step in degrees")
    p.add_argument("--phi-step", type=float, help="phi grid step in degrees")
    p.add_argument("--lobe-db", type=float, help="main-lobe threshold, dB below peak")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("rssi", help="compare two field logs (novel vs baseline)")
    p.add_argument("novel_log")
    p.add_argument("baseline_log")
    p.add_argument("--format", choices=("at", "csv"), default="at")
    p.add_argument("--novel-area-mm2", type=float)
    p.add_argument("--baseline-area-mm2", type=float)
    p.add_argument(
        "--check-dbm",
        action="append",
        metavar="CODE:DBM",
        help="flag a claimed rssi->dBm reading against the affine map (repeatable)",
    )
    p.set_defaults(func=cmd_rssi)

    p = sub.add_parser("synth", help="write a reference series-RLC Touchstone sweep")
    p.add_argument("--r", type=float, required=True, help="series resistance in ohms")
    p.add_argument("--l", type=float, required=True, help="series inductance in henries")
    p.add_argument("--c", type=float, required=True, help="series capacitance in farads")
    p.add_argument("--sweep", type=_sweep, required=True, metavar="START:STOP:POINTS")
    p.add_argument("--unit", choices=tuple(UNIT_SCALE), default="ghz")
    p.add_argument("--encoding", choices=ENCODINGS, default="ma")
    p.add_argument("--out", help="output filename (default synth.s2p / synth.s1p)")
    p.set_defaults(func=cmd_synth)

    return parser


def run_command(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and run one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        cfg = _effective_config(args)
        Path(cfg.out_dir).mkdir(parents=True, exist_ok=True)
        return args.func(args, cfg)
    except (TouchstoneParseError, AtLogParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())
