"""Figure specifications and CSV input validation."""

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

KINDS = ("potential", "profile", "trajectory", "ballscan")

REQUIRED_COLUMNS = {
    "potential": ("phi", "V1", "V2", "V3"),
    "profile": ("x", "phi"),
    "trajectory": ("t", "phi", "phidot", "H", "N", "regime"),
    "ballscan": ("B", "M_B", "dM_dB", "class", "R0"),
}

# optional second input per kind (vacuum markers for the potential well)
SECONDARY_COLUMNS = {
    "potential": ("phi_t", "phi_f", "v_t", "v_f"),
}


class FigureInputError(Exception):
    """Missing file, missing columns, or empty data."""


@dataclass
class FigureSpec:
    kind: str
    csv_in: str
    out: str
    csv_in2: str = None
    xlabel: str = None
    ylabel: str = None
    shade_regimes: bool = True
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FigureInputError(
                f"unknown figure kind {self.kind!r}; expected one of "
                f"{', '.join(KINDS)}")
        if not Path(self.csv_in).is_file():
            raise FigureInputError(f"input CSV not found: {self.csv_in}")
        if self.csv_in2 is not None and not Path(self.csv_in2).is_file():
            raise FigureInputError(
                f"secondary CSV not found: {self.csv_in2}")


def read_columns(path, required):
    """Load a CSV into {name: array}; numeric columns become float64,
    everything else stays as strings."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise FigureInputError(f"{path}: empty file")
        missing = [c for c in required if c not in reader.fieldnames]
        if missing:
            raise FigureInputError(
                f"{path}: missing column(s) {', '.join(missing)}; "
                f"found {', '.join(reader.fieldnames)}")
        rows = list(reader)
    if not rows:
        raise FigureInputError(f"{path}: no data rows")
    out = {}
    for name in reader.fieldnames:
        values = [row[name] for row in rows]
        try:
            out[name] = np.array([float(v) for v in values])
        except ValueError:
            out[name] = np.array(values)
    return out


def load_inputs(spec: FigureSpec):
    """Read the primary (and optional secondary) CSV for a spec."""
    data = read_columns(spec.csv_in, REQUIRED_COLUMNS[spec.kind])
    extra = None
    if spec.csv_in2 is not None and spec.kind in SECONDARY_COLUMNS:
        extra = read_columns(spec.csv_in2, SECONDARY_COLUMNS[spec.kind])
    return data, extra
