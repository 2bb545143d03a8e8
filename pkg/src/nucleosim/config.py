"""`key = value` run configuration: schema, defaults, parsing, sweeps.

The format is deliberately primitive: one assignment per line, `#` opens
a comment, keys are case-sensitive and must be known. Sweep axes use
``sweep.<key> = start:stop:count`` (inclusive linear grid) or
``logsweep.<key>`` for log-spaced grids.
"""

import math
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .potentials import ModelParams
from .qcdball import BallParams

# key -> (type, default); "optfloat" keys default to None (auto).
SCHEMA = {
    # scalar-field model
    "m_p": ("float", 1.0),
    "m": ("float", 0.1),
    "phi_star": ("float", 0.0),
    "a_coeff": ("float", 1.0),
    "lambda": ("float", 1.0),
    "rho_init": ("float", 0.0),
    "drive_amp": ("float", 0.0),
    "t_p": ("float", 1.0),
    "delta_t": ("float", 0.1),
    "K": ("float", 10.0),
    # QCD ball
    "mu": ("float", 1.0),
    "m_n": ("float", 1.0),
    "sigma": ("float", 1.0),
    "c_tilde": ("float", 0.7),
    "b_c_exp": ("float", 1e20),
    "b_soft": ("float", 1e3),
    # shared driver options
    "workers": ("int", 1),
    # field scans (potential-scan, vacua, calibrate, nucleate)
    "phi_min": ("float", -math.pi),
    "phi_max": ("float", 3.0 * math.pi),
    "n_grid": ("int", 4096),
    # soliton
    "kind": ("str", "kink"),
    "x0": ("float", 0.0),
    "separation": ("float", 20.0),
    "grid_min": ("optfloat", None),
    "grid_max": ("optfloat", None),
    "n_points": ("int", 4096),
    # nucleate
    "dt_fluct": ("optfloat", None),
    "budget": ("optfloat", None),
    "r_min": ("float", 0.0),
    "r_max": ("float", 40.0),
    "r_n": ("int", 41),
    "phi_peak": ("float", 2.0 * math.pi),
    # inflate
    "phi0": ("float", 3.1),
    "phidot0": ("float", 0.0),
    "t_end": ("float", 4000.0),
    "use_schedule": ("bool", False),
    "stop_slow_roll": ("bool", True),
    "rtol": ("float", 1e-8),
    "atol": ("float", 1e-10),
    "max_steps": ("int", 500_000),
    # qcdball scan
    "b_min": ("float", 1.0),
    "b_max": ("float", 1e33),
    "b_n": ("int", 67),
    # eta
    "n_b": ("float", 4e-10),
    "n_bbar": ("float", 1e-10),
    "s": ("float", 1.0),
    # calibrate
    "target_gap": ("float", 0.373),
    "m_min": ("float", 0.01),
    "m_max": ("float", 0.5),
    "phi_star_min": ("float", 0.0),
    "phi_star_max": ("float", 0.0),
}

_SWEEPABLE_TYPES = {"float", "int", "optfloat"}


@dataclass(frozen=True)
class SweepAxis:
    key: str
    start: float
    stop: float
    count: int
    log: bool

    def points(self):
        if self.count == 1:
            return [self.start]
        if self.log:
            if self.start <= 0 or self.stop <= 0:
                raise ValidationError(
                    f"logsweep.{self.key} needs positive bounds")
            la, lb = math.log10(self.start), math.log10(self.stop)
            return [10.0 ** (la + (lb - la) * i / (self.count - 1))
                    for i in range(self.count)]
        return [self.start + (self.stop - self.start) * i / (self.count - 1)
                for i in range(self.count)]


@dataclass
class RunConfig:
    """Fully resolved run configuration (defaults + file + overrides)."""

    values: dict = field(default_factory=dict)
    sweeps: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    def model_params(self) -> ModelParams:
        v = self.values
        return ModelParams(
            m_p=v["m_p"], m=v["m"], phi_star=v["phi_star"],
            a_coeff=v["a_coeff"], lambda_coupling=v["lambda"],
            rho_init=v["rho_init"], drive_amp=v["drive_amp"],
            t_p=v["t_p"], delta_t=v["delta_t"], k_mult=v["K"])

    def ball_params(self) -> BallParams:
        v = self.values
        return BallParams(
            mu=v["mu"], m_n=v["m_n"], sigma=v["sigma"],
            c_tilde=v["c_tilde"], b_c_exp=v["b_c_exp"],
            b_soft=v["b_soft"])

    def with_values(self, **overrides) -> "RunConfig":
        merged = dict(self.values)
        merged.update(overrides)
        return RunConfig(values=merged, sweeps={})


def _convert(key, raw, where):
    kind, _ = SCHEMA[key]
    try:
        if kind in ("float", "optfloat"):
            return float(raw)
        if kind == "int":
            as_float = float(raw)
            if as_float != int(as_float):
                raise ValueError(raw)
            return int(as_float)
        if kind == "bool":
            low = raw.lower()
            if low in ("true", "1", "yes", "on"):
                return True
            if low in ("false", "0", "no", "off"):
                return False
            raise ValueError(raw)
        return raw
    except ValueError as exc:
        raise ParseError(
            f"{where}: cannot parse {kind} value {raw!r} for key "
            f"'{key}'") from exc


def _parse_sweep(key, raw, where, log):
    parts = raw.split(":")
    if len(parts) != 3:
        raise ParseError(
            f"{where}: sweep value must be start:stop:count, got {raw!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise ParseError(f"{where}: bad sweep bounds {raw!r}") from exc
    if count < 1:
        raise ParseError(f"{where}: sweep count must be >= 1, got {count}")
    return SweepAxis(key=key, start=start, stop=stop, count=count, log=log)


def _assign(cfg: RunConfig, key: str, raw: str, where: str):
    for prefix, log in (("sweep.", False), ("logsweep.", True)):
        if key.startswith(prefix):
            target = key[len(prefix):]
            if target not in SCHEMA:
                raise ParseError(f"{where}: unknown sweep key '{target}'")
            if SCHEMA[target][0] not in _SWEEPABLE_TYPES:
                raise ParseError(
                    f"{where}: key '{target}' is not numeric, cannot sweep")
            cfg.sweeps[target] = _parse_sweep(target, raw, where, log)
            return
    if key not in SCHEMA:
        raise ParseError(f"{where}: unknown key '{key}'")
    cfg.values[key] = _convert(key, raw, where)


def _validate_options(cfg: RunConfig):
    v = cfg.values
    checks = [
        (v["n_grid"] >= 100, "n_grid must be >= 100"),
        (v["n_points"] >= 64, "n_points must be >= 64"),
        (v["workers"] >= 1, "workers must be >= 1"),
        (v["phi_max"] > v["phi_min"], "phi_max must exceed phi_min"),
        (v["b_n"] >= 2, "b_n must be >= 2"),
        (v["b_min"] >= 1.0, "b_min must be >= 1"),
        (v["b_max"] > v["b_min"], "b_max must exceed b_min"),
        (v["r_n"] >= 1, "r_n must be >= 1"),
        (v["r_max"] >= v["r_min"], "r_max must be >= r_min"),
        (v["r_min"] >= 0.0, "r_min must be >= 0"),
        (v["separation"] >= 0.0, "separation must be >= 0"),
        (v["kind"] in ("kink", "antikink", "pair"),
         "kind must be kink, antikink or pair"),
        (v["t_end"] > 0.0, "t_end must be positive"),
        (v["rtol"] > 0.0, "rtol must be positive"),
        (v["atol"] > 0.0, "atol must be positive"),
        (v["max_steps"] >= 1000, "max_steps must be >= 1000"),
        (v["target_gap"] > 0.0, "target_gap must be positive"),
        (v["m_max"] >= v["m_min"], "m_max must be >= m_min"),
        (v["phi_star_max"] >= v["phi_star_min"],
         "phi_star_max must be >= phi_star_min"),
        (v["dt_fluct"] is None or v["dt_fluct"] > 0.0,
         "dt_fluct must be positive"),
        (v["s"] > 0.0, "s must be positive"),
    ]
    for ok, msg in checks:
        if not ok:
            raise ValidationError(msg)
    # re-validate the dataclass invariants at parse time
    cfg.model_params()
    cfg.ball_params()


def parse_config(text: str) -> RunConfig:
    """Parse a config document into a validated RunConfig."""
    cfg = RunConfig(values={k: d for k, (_, d) in SCHEMA.items()})
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ParseError(f"line {lineno}: expected 'key = value', "
                             f"got {line.strip()!r}")
        key, raw = body.split("=", 1)
        _assign(cfg, key.strip(), raw.strip(), f"line {lineno}")
    _validate_options(cfg)
    return cfg


def apply_overrides(cfg: RunConfig, pairs) -> RunConfig:
    """Apply repeatable --set key=value overrides after file parsing."""
    for i, pair in enumerate(pairs, start=1):
        if "=" not in pair:
            raise ParseError(f"--set #{i}: expected key=value, got {pair!r}")
        key, raw = pair.split("=", 1)
        _assign(cfg, key.strip(), raw.strip(), f"--set #{i}")
    _validate_options(cfg)
    return cfg


def format_fixture(values: dict, keys) -> str:
    """Render selected keys as a reusable `key = value` document."""
    lines = []
    for key in keys:
        val = values[key]
        if isinstance(val, bool):
            rendered = "true" if val else "false"
        elif isinstance(val, float):
            rendered = f"{val:.17g}"
        else:
            rendered = str(val)
        lines.append(f"{key} = {rendered}")
    return "\n".join(lines) + "\n"
