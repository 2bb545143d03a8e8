"""Subcommand dispatch and CSV emission.

    nucleosim <subcommand> --config <path> --out <path> [--set key=value]...

Every artifact is a deterministic CSV (17-significant-digit floats, LF
newlines); run metadata goes to a `<out>.meta` sidecar so data files stay
byte-reproducible. Module errors map to distinct exit codes (EXIT_CODES).
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import baryogenesis, inflation, nucleation, qcdball, solitons, vacua
from .config import RunConfig, SCHEMA, apply_overrides, format_fixture, \
    parse_config
from .errors import CalibrationError, DegenerateError, DomainError, \
    GridError, NoExtremumError, NucleosimError, ParseError, PoleError, \
    StepError, ValidationError
from .potentials import v1, v3
from .solitons import kink_energy, kink_profile, kink_width, pair_profile, \
    profile_energy

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NUMERICAL = 4
EXIT_SEARCH = 5

EXIT_CODES = {
    ParseError: EXIT_PARSE,
    ValidationError: EXIT_VALIDATION,
    DomainError: EXIT_VALIDATION,
    PoleError: EXIT_NUMERICAL,
    StepError: EXIT_NUMERICAL,
    GridError: EXIT_NUMERICAL,
    NoExtremumError: EXIT_SEARCH,
    DegenerateError: EXIT_SEARCH,
    CalibrationError: EXIT_SEARCH,
}

FIXTURE_KEYS = ("m_p", "m", "phi_star", "a_coeff", "lambda", "rho_init",
                "drive_amp", "t_p", "delta_t", "K")


def _fmt(value):
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _write_csv(path, header, rows):
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_meta(out_path, command, cfg: RunConfig):
    lines = [f"command = {command}"]
    for key in sorted(cfg.values):
        val = cfg.values[key]
        if val is None:
            continue
        lines.append(f"{key} = {_fmt(val)}")
    for key in sorted(cfg.sweeps):
        ax = cfg.sweeps[key]
        prefix = "logsweep" if ax.log else "sweep"
        lines.append(f"{prefix}.{key} = {_fmt(ax.start)}:{_fmt(ax.stop)}:"
                     f"{ax.count}")
    with open(f"{out_path}.meta", "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_potential_scan(cfg: RunConfig, out):
    p = cfg.model_params()
    phis = np.linspace(cfg["phi_min"], cfg["phi_max"], cfg["n_grid"])
    col1 = v1(phis, p)
    den = 1.0 + p.a_coeff * phis ** 3
    col2 = np.where(den > 0.0, 0.5 * p.m ** 2 * phis ** 2
                    / np.where(den > 0.0, den, 1.0), np.nan)
    col3 = v3(phis, p)
    _write_csv(out, ["phi", "V1", "V2", "V3"],
               zip(phis, col1, col2, col3))


def _vacua_row(cfg: RunConfig):
    p = cfg.model_params()
    pair = vacua.vacuum_pair(p, (cfg["phi_min"], cfg["phi_max"]),
                             cfg["n_grid"])
    bt = vacua.bracket_terms(p, pair)
    return (pair.phi_t, pair.phi_f, pair.v_t, pair.v_f, pair.curv_t,
            pair.curv_f, pair.gap, bt.bracket_a, bt.bracket_b,
            bt.gap_check, bt.residual)


_VACUA_HEADER = ["phi_t", "phi_f", "v_t", "v_f", "curv_t", "curv_f", "gap",
                 "bracket_a", "bracket_b", "gap_check", "residual"]


def _cmd_vacua(cfg: RunConfig, out):
    _write_csv(out, _VACUA_HEADER, [_vacua_row(cfg)])


def _cmd_calibrate(cfg: RunConfig, out):
    p = vacua.gap_calibrate(
        cfg["target_gap"], cfg.model_params(),
        (cfg["m_min"], cfg["m_max"]),
        (cfg["phi_star_min"], cfg["phi_star_max"]),
        phi_range=(cfg["phi_min"], cfg["phi_max"]), n_grid=cfg["n_grid"])
    values = dict(cfg.values)
    values.update({"m_p": p.m_p, "m": p.m, "phi_star": p.phi_star,
                   "a_coeff": p.a_coeff, "lambda": p.lambda_coupling,
                   "rho_init": p.rho_init, "drive_amp": p.drive_amp,
                   "t_p": p.t_p, "delta_t": p.delta_t, "K": p.k_mult})
    with open(out, "w", newline="\n") as fh:
        fh.write(format_fixture(values, FIXTURE_KEYS))


def _cmd_soliton(cfg: RunConfig, out):
    p = cfg.model_params()
    k = kink_width(p)
    kind = cfg["kind"]
    if kind == "pair":
        if cfg["grid_min"] is not None and cfg["grid_max"] is not None:
            grid = (cfg["grid_min"], cfg["grid_max"], cfg["n_points"])
        else:
            span = cfg["separation"] / 2.0 + 12.0 / k
            grid = (-span, span, cfg["n_points"])
        profile = pair_profile(cfg["separation"], p, grid)
    else:
        x0 = cfg["x0"]
        if cfg["grid_min"] is not None and cfg["grid_max"] is not None:
            grid = (cfg["grid_min"], cfg["grid_max"], cfg["n_points"])
        else:
            grid = (x0 - 16.0 / k, x0 + 16.0 / k, cfg["n_points"])
        profile = kink_profile(x0, +1 if kind == "kink" else -1, p, grid)
    solitons.write_profile_csv(profile, out)
    _write_csv(f"{out}.energy.csv",
               ["e_bps", "e_grid", "charge", "charge_gradient"],
               [(kink_energy(p), profile_energy(profile, p),
                 solitons.topological_charge(profile),
                 solitons.gradient_charge(profile))])


def _nucleate_quantities(cfg: RunConfig):
    p = cfg.model_params()
    e_kink = kink_energy(p)
    pair = vacua.vacuum_pair(p, (cfg["phi_min"], cfg["phi_max"]),
                             cfg["n_grid"])
    dt = cfg["dt_fluct"] if cfg["dt_fluct"] is not None else p.t_p
    scales = nucleation.heisenberg_scales(dt)
    budget = cfg["budget"] if cfg["budget"] is not None else scales.delta_e
    r_star = nucleation.critical_separation(e_kink, pair.gap, budget)
    alpha, lambda_s = nucleation.dilaton_radius(cfg["phi_peak"])
    return p, e_kink, pair, scales, budget, r_star, alpha, lambda_s


_NUCLEATE_HEADER = ["delta_t", "delta_e", "e_kink", "gap", "budget",
                    "r_star", "alpha_gauge", "lambda_s"]


def _nucleate_row(cfg: RunConfig):
    _, e_kink, pair, scales, budget, r_star, alpha, lam = \
        _nucleate_quantities(cfg)
    return (scales.delta_t, scales.delta_e, e_kink, pair.gap, budget,
            r_star, alpha, lam)


def _cmd_nucleate(cfg: RunConfig, out):
    _, e_kink, pair, scales, budget, r_star, alpha, lam = \
        _nucleate_quantities(cfg)
    rs = np.linspace(cfg["r_min"], cfg["r_max"], cfg["r_n"])
    rows = [(r, nucleation.pair_energy_thin_wall(r, e_kink, pair.gap))
            for r in rs]
    _write_csv(out, ["r", "E_pair"], rows)
    _write_csv(f"{out}.scales.csv", _NUCLEATE_HEADER,
               [(scales.delta_t, scales.delta_e, e_kink, pair.gap, budget,
                 r_star, alpha, lam)])


def _run_inflate(cfg: RunConfig):
    return inflation.integrate_eom(
        cfg["phi0"], cfg["phidot0"], (0.0, cfg["t_end"]),
        cfg.model_params(), use_schedule=cfg["use_schedule"],
        stop_slow_roll=cfg["stop_slow_roll"], rtol=cfg["rtol"],
        atol=cfg["atol"], max_steps=cfg["max_steps"])


def _inflate_row(cfg: RunConfig):
    traj = _run_inflate(cfg)
    return (traj.t[-1], traj.phi[-1], traj.phidot[-1],
            inflation.efolds(traj), traj.terminated_by)


def _cmd_inflate(cfg: RunConfig, out):
    inflation.write_trajectory_csv(_run_inflate(cfg), out)


def _cmd_qcdball(cfg: RunConfig, out):
    bp = cfg.ball_params()
    bs = np.logspace(np.log10(cfg["b_min"]), np.log10(cfg["b_max"]),
                     cfg["b_n"])
    rows = [(b, qcdball.ball_mass(b, bp), qcdball.mass_slope(b, bp),
             qcdball.stability_class(b, bp).value,
             qcdball.ball_radius(b, bp)) for b in bs]
    _write_csv(out, ["B", "M_B", "dM_dB", "class", "R0"], rows)


def _eta_row(cfg: RunConfig):
    val = baryogenesis.eta(baryogenesis.AsymmetryInput(
        n_b=cfg["n_b"], n_bbar=cfg["n_bbar"], s=cfg["s"]))
    return (val, baryogenesis.in_bbn_window(val))


def _cmd_eta(cfg: RunConfig, out):
    val, ok = _eta_row(cfg)
    _write_csv(out, ["eta", "in_window"], [(val, ok)])
    print(f"eta = {val:.17g}  in_bbn_window = {ok}")


_SWEEP_ROWS = {
    "vacua": (_VACUA_HEADER, _vacua_row),
    "nucleate": (_NUCLEATE_HEADER, _nucleate_row),
    "inflate": (["t_final", "phi_final", "phidot_final", "N", "terminated_by"],
                _inflate_row),
    "eta": (["eta", "in_window"], _eta_row),
}

_COMMANDS = {
    "potential-scan": _cmd_potential_scan,
    "vacua": _cmd_vacua,
    "calibrate": _cmd_calibrate,
    "soliton": _cmd_soliton,
    "nucleate": _cmd_nucleate,
    "inflate": _cmd_inflate,
    "qcdball": _cmd_qcdball,
    "eta": _cmd_eta,
}


def _run_sweep(name: str, cfg: RunConfig, out):
    if name not in _SWEEP_ROWS:
        raise ValidationError(
            f"subcommand '{name}' does not support sweep axes")
    summary_header, row_fn = _SWEEP_ROWS[name]
    axes = list(cfg.sweeps.values())
    grids = [ax.points() for ax in axes]
    cells = [{}]
    for ax, pts in zip(axes, grids):
        cells = [dict(cell, **{ax.key: v}) for cell in cells for v in pts]
    header = [ax.key for ax in axes] + summary_header

    def one(cell):
        sub = cfg.with_values(**cell)
        return tuple(cell[ax.key] for ax in axes) + tuple(row_fn(sub))

    workers = cfg["workers"]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, cells))
    else:
        rows = [one(cell) for cell in cells]
    _write_csv(out, header, rows)


def run_subcommand(name: str, cfg: RunConfig, out_path: str) -> int:
    """Execute one subcommand, writing its CSV artifact(s) plus a
    `.meta` sidecar. Returns 0; module errors propagate to the caller."""
    if name not in _COMMANDS:
        raise ValidationError(f"unknown subcommand '{name}'")
    if cfg.sweeps:
        _run_sweep(name, cfg, out_path)
    else:
        _COMMANDS[name](cfg, out_path)
    _write_meta(out_path, name, cfg)
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nucleosim",
        description="Soliton-mediated nucleation toy cosmology driver")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--config", default=None,
                         help="key = value config file")
        cmd.add_argument("--out", required=True, help="output CSV path")
        cmd.add_argument("--set", action="append", default=[],
                         metavar="KEY=VALUE", dest="overrides",
                         help="override a config key (repeatable)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.config is not None:
            with open(args.config) as fh:
                cfg = parse_config(fh.read())
        else:
            cfg = parse_config("")
        if args.overrides:
            cfg = apply_overrides(cfg, args.overrides)
        return run_subcommand(args.command, cfg, args.out)
    except NucleosimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for klass, code in EXIT_CODES.items():
            if isinstance(exc, klass):
                return code
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
