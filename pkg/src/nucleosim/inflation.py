"""Slow-roll analytics and full scalar-field evolution in an FRW background.

The equation of motion phi'' + 3H phi' + V'(phi) = 0 with
H = sqrt(8 pi rho / 3) / m_p is integrated by an embedded Fehlberg 4(5)
stepper (see _kernels); e-folds accumulate as the extra state dN/dt = H.
With the schedule enabled the potential switches regime at t_p and
t_p + K*delta_t while (phi, phidot) carry over continuously.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import PoleError, StepError, ValidationError
from .potentials import ModelParams, regime_at, v_effective, v3

TERMINATED_T_END = "t_end"
TERMINATED_SLOW_ROLL = "slow_roll"
TERMINATED_POLE = "pole"


@dataclass(frozen=True)
class Trajectory:
    """Sampled evolution (t, phi, phidot, H, N_efolds, regime)."""

    t: np.ndarray
    phi: np.ndarray
    phidot: np.ndarray
    hubble: np.ndarray
    n_efolds: np.ndarray
    regime: np.ndarray
    terminated_by: str


def phi_star_analytic(p: ModelParams) -> float:
    """Field value where quantum and classical inflaton steps coincide:
    (3/(16 pi))^(1/4) * m_p^(3/2) / m^(1/2)."""
    return (3.0 / (16.0 * math.pi)) ** 0.25 \
        * p.m_p ** 1.5 / math.sqrt(p.m)


def chaotic_bound_check(phi0: float, p: ModelParams) -> bool:
    """True iff phi0 clears the 60-e-fold bound sqrt(60/(2 pi)) * m_p."""
    return phi0 > math.sqrt(60.0 / (2.0 * math.pi)) * p.m_p


def slow_roll_phi(t: float, phi0: float, p: ModelParams) -> float:
    """Slow-roll line phi0 - (m * m_p / sqrt(12 pi)) * t."""
    return phi0 - p.m * p.m_p / math.sqrt(12.0 * math.pi) * t


def _schedule_legs(t0: float, t1: float, p: ModelParams):
    """Split [t0, t1] at the regime switch times; regime fixed per leg,
    classified at the leg midpoint (the interior is switch-free)."""
    bounds = [p.t_p, p.regime3_onset]
    cuts = [t0] + [b for b in bounds if t0 < b < t1] + [t1]
    legs = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        legs.append((a, b, int(regime_at(0.5 * (a + b), p))))
    return legs


def integrate_eom(phi0: float, phidot0: float, t_span, p: ModelParams,
                  use_schedule: bool = False, stop_slow_roll: bool = True,
                  rtol: float = 1e-8, atol: float = 1e-10,
                  max_steps: int = 500_000) -> Trajectory:
    """Integrate the scalar-field EOM over t_span.

    use_schedule=False evolves on the bare harmonic potential; otherwise
    the regime schedule applies. Integration stops at t_span[1], at the
    first sample with eps_H = -Hdot/H^2 >= 1 (when stop_slow_roll), or
    when the rational potential's pole is hit (terminated_by="pole").
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if t0 < 0 or t1 <= t0:
        raise ValidationError(f"need 0 <= t_start < t_end, got [{t0}, {t1}]")

    v_init = v_effective(phi0, t0, p) if use_schedule else v3(phi0, p)
    rho0 = 0.5 * phidot0 ** 2 + float(v_init)
    if rho0 < 0:
        raise ValidationError(
            f"initial energy density {rho0:.3e} is negative")

    if use_schedule:
        legs = _schedule_legs(t0, t1, p)
    else:
        legs = [(t0, t1, 3)]
    leg_t0 = np.array([a for a, _, _ in legs])
    leg_t1 = np.array([b for _, b, _ in legs])
    leg_regime = np.array([r for _, _, r in legs], dtype=np.int64)

    out_t = np.empty(max_steps)
    out_phi = np.empty(max_steps)
    out_phidot = np.empty(max_steps)
    out_h = np.empty(max_steps)
    out_n = np.empty(max_steps)

    drive = p.drive_amp if use_schedule else 0.0
    rho_init = p.rho_init if use_schedule else 0.0
    rows, status = _kernels.integrate_schedule(
        float(phi0), float(phidot0), leg_t0, leg_t1, leg_regime,
        p.m_p, p.m, p.phi_star, p.a_coeff, rho_init, drive,
        bool(stop_slow_roll), float(rtol), float(atol),
        out_t, out_phi, out_phidot, out_h, out_n)

    if status == _kernels.STATUS_STEP_UNDERFLOW:
        raise StepError("step size underflowed below 1e-14")
    if status == _kernels.STATUS_NEG_ENERGY:
        raise StepError("energy density went negative during integration")
    if status == _kernels.STATUS_ROW_OVERFLOW:
        raise StepError(f"more than max_steps={max_steps} accepted steps")
    if status == _kernels.STATUS_POLE and rows == 0:
        raise PoleError("rational potential pole at the initial state")

    terminated_by = {
        _kernels.STATUS_T_END: TERMINATED_T_END,
        _kernels.STATUS_SLOW_ROLL: TERMINATED_SLOW_ROLL,
        _kernels.STATUS_POLE: TERMINATED_POLE,
    }[status]

    ts = out_t[:rows].copy()
    regimes = np.array([int(regime_at(t, p)) for t in ts], dtype=np.int64)
    return Trajectory(
        t=ts, phi=out_phi[:rows].copy(), phidot=out_phidot[:rows].copy(),
        hubble=out_h[:rows].copy(), n_efolds=out_n[:rows].copy(),
        regime=regimes, terminated_by=terminated_by)


def efolds(traj: Trajectory) -> float:
    """Total e-folds accumulated along the trajectory."""
    return float(traj.n_efolds[-1])


def write_trajectory_csv(traj: Trajectory, path):
    """CSV export, header t,phi,phidot,H,N,regime, 17 significant digits."""
    with open(path, "w", newline="\n") as fh:
        fh.write("t,phi,phidot,H,N,regime\n")
        for i in range(traj.t.size):
            fh.write(f"{traj.t[i]:.17g},{traj.phi[i]:.17g},"
                     f"{traj.phidot[i]:.17g},{traj.hubble[i]:.17g},"
                     f"{traj.n_efolds[i]:.17g},{traj.regime[i]}\n")
