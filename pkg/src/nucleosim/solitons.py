"""Sine-Gordon kink/antikink profiles, pair configurations and energies.

The analytic kink of the cosine sector, phi = 4*arctan(exp(k(x-x0))) with
k = m_p/sqrt(2), sets the wall shape; pairs are built by superposing a
kink and an antikink, which is exact up to O(exp(-kR)) overlap terms.
Energies come from a plain grid functional of the full tilted potential,
so the tilt the analytic profile ignores is still measured.
"""

from dataclasses import dataclass

import numpy as np

from .errors import GridError
from .potentials import ModelParams, v1

TWO_PI = 2.0 * np.pi
MIN_POINTS = 64
BOUNDARY_TOL = 1e-3


@dataclass(frozen=True)
class FieldProfile:
    """Field samples on a uniform 1-D grid."""

    xs: np.ndarray
    phis: np.ndarray
    kind: str = "custom"
    centers: tuple = ()
    width: float = np.nan

    def __post_init__(self):
        xs, phis = np.asarray(self.xs, float), np.asarray(self.phis, float)
        if xs.ndim != 1 or xs.shape != phis.shape or xs.size < 2:
            raise GridError("profile needs matching 1-D xs/phis, n >= 2")
        steps = np.diff(xs)
        if np.any(steps <= 0):
            raise GridError("grid positions must be strictly increasing")
        h = steps[0]
        if np.max(np.abs(steps - h)) > 1e-12 * max(1.0, abs(h)):
            raise GridError("grid spacing is not uniform")
        if not np.all(np.isfinite(phis)):
            raise GridError("field values must be finite")
        dphi = np.diff(phis)
        if self.kind == "kink" and np.any(dphi < 0):
            raise GridError("kink profile must be monotone increasing")
        if self.kind == "antikink" and np.any(dphi > 0):
            raise GridError("antikink profile must be monotone decreasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "phis", phis)

    @property
    def spacing(self):
        return float(self.xs[1] - self.xs[0])


def kink_width(p: ModelParams):
    """Inverse wall thickness k = m_p/sqrt(2) of the cosine sector."""
    return p.m_p / np.sqrt(2.0)


def kink_shape(x, x0, sign, k):
    """Analytic kink 4*arctan(exp(sign*k*(x-x0)))."""
    return 4.0 * np.arctan(np.exp(sign * k * (x - x0)))


def kink_profile(x0: float, sign: int, p: ModelParams,
                 grid) -> FieldProfile:
    """Sample a single kink (sign=+1) or antikink (sign=-1) on a grid.

    grid is (x_min, x_max, n). Raises GridError when n < 64 or the grid
    ends deviate from the vacuum plateaus by more than 1e-3.
    """
    x_min, x_max, n = float(grid[0]), float(grid[1]), int(grid[2])
    if n < MIN_POINTS:
        raise GridError(f"need at least {MIN_POINTS} grid points, got {n}")
    if sign not in (+1, -1):
        raise GridError(f"sign must be +1 or -1, got {sign}")
    k = kink_width(p)
    xs = np.linspace(x_min, x_max, n)
    phis = kink_shape(xs, x0, sign, k)
    lo_target, hi_target = (0.0, TWO_PI) if sign > 0 else (TWO_PI, 0.0)
    if abs(phis[0] - lo_target) > BOUNDARY_TOL \
            or abs(phis[-1] - hi_target) > BOUNDARY_TOL:
        raise GridError(
            f"grid [{x_min}, {x_max}] too narrow for a kink of width "
            f"{1.0 / k:.3g} at x0={x0}")
    return FieldProfile(xs, phis, kind="kink" if sign > 0 else "antikink",
                        centers=(x0,), width=1.0 / k)


def pair_profile(separation: float, p: ModelParams,
                 grid=None) -> FieldProfile:
    """Kink at -R/2 superposed with an antikink at +R/2.

    phi(x) = phi_K(x + R/2) - phi_K(x - R/2) vanishes at both ends and
    plateaus near 2*pi inside for R >> 1/k. Default grid: 4096 points over
    [-(R/2 + 12/k), +(R/2 + 12/k)].
    """
    if separation < 0:
        raise GridError(f"separation must be >= 0, got {separation}")
    k = kink_width(p)
    r_half = separation / 2.0
    if grid is None:
        span = r_half + 12.0 / k
        grid = (-span, span, 4096)
    x_min, x_max, n = float(grid[0]), float(grid[1]), int(grid[2])
    if n < MIN_POINTS:
        raise GridError(f"need at least {MIN_POINTS} grid points, got {n}")
    if x_min > -r_half - 5.0 / k or x_max < r_half + 5.0 / k:
        raise GridError(
            f"grid [{x_min}, {x_max}] must hold both centers +-{r_half:.3g} "
            f"with a 5-width margin ({5.0 / k:.3g})")
    xs = np.linspace(x_min, x_max, n)
    phis = kink_shape(xs, -r_half, +1, k) - kink_shape(xs, r_half, +1, k)
    return FieldProfile(xs, phis, kind="pair", centers=(-r_half, r_half),
                        width=1.0 / k)


def topological_charge(profile: FieldProfile) -> float:
    """Winding number from the endpoint values, (phi_end - phi_start)/2pi."""
    return float(profile.phis[-1] - profile.phis[0]) / TWO_PI


def gradient_charge(profile: FieldProfile) -> float:
    """Diagnostic winding estimate from the summed field gradient."""
    dphi = np.gradient(profile.phis, profile.spacing)
    return float(np.sum(dphi) * profile.spacing) / TWO_PI


def kink_energy(p: ModelParams, n_panels: int = 1024) -> float:
    """Wall tension from the first-order bound, by composite Simpson.

    Integrates sqrt(2 * (m_p^2/2)(1 - cos phi)) over one cosine period;
    the closed form is 4*sqrt(2)*m_p.
    """
    if n_panels < 1024:
        n_panels = 1024
    if n_panels % 2:
        n_panels += 1
    phi = np.linspace(0.0, TWO_PI, n_panels + 1)
    f = np.sqrt(p.m_p ** 2 * (1.0 - np.cos(phi)))
    w = np.ones(n_panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    h = TWO_PI / n_panels
    return float(h / 3.0 * np.dot(w, f))


def profile_energy(profile: FieldProfile, p: ModelParams) -> float:
    """Grid energy sum((phi'^2/2 + v1(phi)) * h), centered differences."""
    if profile.xs.size < MIN_POINTS:
        raise GridError(
            f"need at least {MIN_POINTS} grid points, got {profile.xs.size}")
    h = profile.spacing
    dphi = np.gradient(profile.phis, h)
    density = 0.5 * dphi ** 2 + v1(profile.phis, p)
    return float(np.sum(density) * h)


def write_profile_csv(profile: FieldProfile, path):
    """CSV export, header x,phi, 17 significant digits."""
    with open(path, "w", newline="\n") as fh:
        fh.write("x,phi\n")
        for x, phi in zip(profile.xs, profile.phis):
            fh.write(f"{x:.17g},{phi:.17g}\n")
