"""True/false vacuum search for the regime-1 potential.

A grid scan of the analytic derivative feeds a bisection refinement of
every sign change; adjacent minima are classified into true/false pairs
whose energy difference is the gap driving nucleation. gap_calibrate
inverts the map m -> gap to hit a requested gap value.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CalibrationError, DegenerateError, NoExtremumError, \
    ValidationError
from .potentials import ModelParams, RegimeTag, d2v1, dv, v1

DV_TOL_SCALE = 1e-12
DEGENERATE_GAP = 1e-14
DEFAULT_GRID = 4096


@dataclass(frozen=True)
class VacuumPair:
    """Adjacent true (lower) and false (higher) minima of the regime-1 well."""

    phi_t: float
    phi_f: float
    v_t: float
    v_f: float
    curv_t: float
    curv_f: float
    gap: float


class BracketTerms(NamedTuple):
    bracket_a: float
    bracket_b: float
    gap_check: float
    residual: float


def _bisect_root(p, lo, hi, f_lo, tol):
    """Bisection on the sign of dv(regime1); deterministic to the bit."""
    a, b = lo, hi
    fa = f_lo
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = dv(RegimeTag.REGIME1, mid, p)
        if abs(fm) <= tol or (b - a) <= 1e-15 * max(1.0, abs(mid)):
            return mid
        if (fa < 0.0) == (fm < 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def find_extrema(p: ModelParams, phi_range, n_grid: int = DEFAULT_GRID):
    """Locate stationary points of v1 in phi_range.

    Returns a phi-sorted list of (phi, kind) with kind in {"min", "max"};
    the kind comes from a central-difference second derivative (h=1e-6).
    Raises NoExtremumError when the derivative never changes sign on the
    grid (large tilt wipes out the wells).
    """
    lo, hi = float(phi_range[0]), float(phi_range[1])
    if not hi > lo:
        raise ValidationError(f"empty field range [{lo}, {hi}]")
    if n_grid < 100:
        raise ValidationError(f"n_grid must be >= 100, got {n_grid}")

    grid = np.linspace(lo, hi, int(n_grid))
    slope = dv(RegimeTag.REGIME1, grid, p)
    tol = DV_TOL_SCALE * max(1.0, p.m_p ** 2)

    roots = []
    for i in range(len(grid) - 1):
        f0, f1 = slope[i], slope[i + 1]
        if f0 == 0.0:
            roots.append(grid[i])
        elif f0 * f1 < 0.0:
            roots.append(_bisect_root(p, grid[i], grid[i + 1], f0, tol))
    if slope[-1] == 0.0:
        roots.append(grid[-1])
    if not roots:
        raise NoExtremumError(
            f"dv has no sign change in [{lo}, {hi}] "
            f"(m={p.m}, m_p={p.m_p}, phi_star={p.phi_star})")

    h = 1e-6
    out = []
    for r in roots:
        curv = (dv(RegimeTag.REGIME1, r + h, p)
                - dv(RegimeTag.REGIME1, r - h, p)) / (2.0 * h)
        out.append((float(r), "min" if curv > 0.0 else "max"))
    out.sort(key=lambda item: item[0])
    return out


def vacuum_pair(p: ModelParams, phi_range, n_grid: int = DEFAULT_GRID) -> VacuumPair:
    """Pick the adjacent pair of minima separated by the highest barrier.

    Ties between equally tall barriers break toward the smaller left
    minimum. Raises DegenerateError when the wells are energy-degenerate.
    """
    extrema = find_extrema(p, phi_range, n_grid)
    minima = [phi for phi, kind in extrema if kind == "min"]
    maxima = [phi for phi, kind in extrema if kind == "max"]
    if len(minima) < 2:
        raise NoExtremumError(
            f"need at least two minima in [{phi_range[0]}, {phi_range[1]}], "
            f"found {len(minima)}")

    best = None
    for left, right in zip(minima[:-1], minima[1:]):
        tops = [v1(mx, p) for mx in maxima if left < mx < right]
        barrier = max(tops) if tops else -np.inf
        if best is None or barrier > best[0]:
            best = (barrier, left, right)
    _, left, right = best

    v_left, v_right = float(v1(left, p)), float(v1(right, p))
    if v_left <= v_right:
        phi_t, phi_f, v_t, v_f = left, right, v_left, v_right
    else:
        phi_t, phi_f, v_t, v_f = right, left, v_right, v_left
    gap = v_f - v_t
    if gap < DEGENERATE_GAP:
        raise DegenerateError(
            f"vacua are degenerate (gap={gap:.3e}); thin-wall picture "
            "undefined")
    return VacuumPair(
        phi_t=phi_t, phi_f=phi_f, v_t=v_t, v_f=v_f,
        curv_t=float(d2v1(phi_t, p)), curv_f=float(d2v1(phi_f, p)),
        gap=gap)


def _gap_or_none(m, phi_star, template: ModelParams, phi_range, n_grid):
    try:
        p = ModelParams(
            m_p=template.m_p, m=m, phi_star=phi_star,
            a_coeff=template.a_coeff,
            lambda_coupling=template.lambda_coupling,
            rho_init=template.rho_init, drive_amp=template.drive_amp,
            t_p=template.t_p, delta_t=template.delta_t,
            k_mult=template.k_mult)
        return p, vacuum_pair(p, phi_range, n_grid).gap
    except (ValidationError, NoExtremumError, DegenerateError):
        return None, None


def gap_calibrate(target_gap: float, p_template: ModelParams,
                  m_range, phi_star_range=(0.0, 0.0),
                  phi_range=(-np.pi, 3.0 * np.pi),
                  n_grid: int = DEFAULT_GRID, n_scan: int = 64,
                  n_phi_star: int = 1, gap_tol: float = 1e-6) -> ModelParams:
    """Find (m, phi_star) whose vacuum gap hits target_gap within gap_tol.

    For each phi_star on its grid, the m interval is scanned for a bracket
    of target_gap and refined by bisection on m. Cells with invalid
    parameters or no double well count as misses. Candidates are ranked by
    smallest m, then smallest phi_star, so the result is independent of
    scan order.
    """
    if not target_gap > 0.0:
        raise CalibrationError(
            f"target gap must be positive, got {target_gap}")
    m_lo, m_hi = float(m_range[0]), float(m_range[1])
    ps_lo, ps_hi = float(phi_star_range[0]), float(phi_star_range[1])
    if ps_hi > ps_lo and n_phi_star < 2:
        n_phi_star = 9
    phi_stars = np.linspace(ps_lo, ps_hi, n_phi_star) if n_phi_star > 1 \
        else np.array([ps_lo])

    candidates = []
    for phi_star in phi_stars:
        ms = np.linspace(m_lo, m_hi, n_scan)
        gaps = [_gap_or_none(m, phi_star, p_template, phi_range, n_grid)[1]
                for m in ms]
        for i in range(len(ms) - 1):
            g0, g1 = gaps[i], gaps[i + 1]
            if g0 is None or g1 is None:
                continue
            if abs(g0 - target_gap) <= gap_tol:
                candidates.append((ms[i], phi_star))
                break
            if (g0 - target_gap) * (g1 - target_gap) > 0.0:
                continue
            a, b, ga = ms[i], ms[i + 1], g0
            hit = None
            for _ in range(200):
                mid = 0.5 * (a + b)
                _, gm = _gap_or_none(mid, phi_star, p_template, phi_range,
                                     n_grid)
                if gm is None:
                    break
                if abs(gm - target_gap) <= gap_tol:
                    hit = mid
                    break
                if (ga - target_gap) * (gm - target_gap) > 0.0:
                    a, ga = mid, gm
                else:
                    b = mid
            if hit is not None:
                candidates.append((hit, phi_star))
                break

    if not candidates:
        raise CalibrationError(
            f"no (m, phi_star) in m=[{m_lo}, {m_hi}], "
            f"phi_star=[{ps_lo}, {ps_hi}] reaches gap {target_gap}")
    m_best, ps_best = min(candidates)
    p, _ = _gap_or_none(m_best, ps_best, p_template, phi_range, n_grid)
    return p


def bracket_terms(p: ModelParams, pair: VacuumPair) -> BracketTerms:
    """Closed-form bracket terms tied to the gap identity.

    bracket_a = m_p^2 + 2 m^2, bracket_b = 2 m_p^2 phi_T phi_F / 6 and
    gap_check = (bracket_a - bracket_b)/2; the residual against the
    numerically measured gap is diagnostic, not asserted.
    """
    bracket_a = p.m_p ** 2 + 2.0 * p.m ** 2
    bracket_b = 2.0 * p.m_p ** 2 * pair.phi_t * pair.phi_f / 6.0
    gap_check = (bracket_a - bracket_b) / 2.0
    return BracketTerms(bracket_a, bracket_b, gap_check,
                        abs(gap_check - pair.gap))
