"""Hot numeric kernels, JIT-compiled with numba when available.

Set ``NUCLEOSIM_NO_NUMBA=1`` to force the pure-Python/numpy fallback path
(same source, identity decorator). ``benchmarks/bench_integrator.py``
compares the two paths.
"""

import os

import numpy as np

_flag = os.environ.get("NUCLEOSIM_NO_NUMBA", "").strip().lower()
NUMBA_ENABLED = _flag not in {"1", "true", "yes"}

if NUMBA_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# Trajectory termination codes shared with inflation.py.
STATUS_T_END = 0
STATUS_SLOW_ROLL = 1
STATUS_POLE = 2
STATUS_STEP_UNDERFLOW = 3
STATUS_NEG_ENERGY = 4
STATUS_ROW_OVERFLOW = 5

_EIGHT_PI_THIRDS = 8.0 * np.pi / 3.0
_FOUR_PI = 4.0 * np.pi


@njit(cache=True)
def rhs_values(phi, phidot, regime, m_p, m, phi_star, a_coeff, rho_init,
               drive_amp):
    """FRW scalar-field right-hand side under one fixed regime potential.

    Returns (dphi/dt, dphidot/dt, H, status); H doubles as dN/dt.
    status: 0 ok, STATUS_POLE rational-potential pole, STATUS_NEG_ENERGY
    negative total energy density.
    """
    if regime == 1:
        c = np.cos(phi)
        v = rho_init + 0.5 * m_p * m_p * (1.0 - c) \
            + 0.5 * m * m * (phi - phi_star) ** 2 + drive_amp * phi
        dv = 0.5 * m_p * m_p * np.sin(phi) + m * m * (phi - phi_star) \
            + drive_amp
    elif regime == 2:
        den = 1.0 + a_coeff * phi ** 3
        if den <= 0.0:
            return 0.0, 0.0, 0.0, STATUS_POLE
        v = 0.5 * m * m * phi * phi / den
        dv = m * m * phi * (1.0 - 0.5 * a_coeff * phi ** 3) / (den * den)
    else:
        v = 0.5 * m * m * phi * phi
        dv = m * m * phi
    rho = 0.5 * phidot * phidot + v
    if rho < 0.0:
        return 0.0, 0.0, 0.0, STATUS_NEG_ENERGY
    hub = np.sqrt(_EIGHT_PI_THIRDS * rho) / m_p
    return phidot, -3.0 * hub * phidot - dv, hub, 0


@njit(cache=True)
def integrate_schedule(phi0, phidot0, leg_t0, leg_t1, leg_regime,
                       m_p, m, phi_star, a_coeff, rho_init, drive_amp,
                       stop_slow_roll, rtol, atol,
                       out_t, out_phi, out_phidot, out_h, out_n):
    """Embedded Fehlberg 4(5) integration of phi'' + 3H phi' + V'(phi) = 0.

    The schedule is pre-split into legs with a fixed regime each, so the
    stepped right-hand side is smooth; (phi, phidot) carry continuously
    across leg boundaries. The 4th-order solution is propagated; the
    4th/5th difference drives the step controller. Rows land in the out_*
    arrays at every accepted step. Returns (rows_written, status).
    """
    max_rows = out_t.shape[0]
    phi = phi0
    phidot = phidot0
    nefold = 0.0

    f0, f1, hub, st = rhs_values(phi, phidot, leg_regime[0], m_p, m,
                                 phi_star, a_coeff, rho_init, drive_amp)
    if st != 0:
        return 0, st
    out_t[0] = leg_t0[0]
    out_phi[0] = phi
    out_phidot[0] = phidot
    out_h[0] = hub
    out_n[0] = nefold
    rows = 1

    t = leg_t0[0]
    for leg in range(leg_t0.shape[0]):
        t_leg_end = leg_t1[leg]
        regime = leg_regime[leg]
        if t_leg_end <= t:
            continue
        h = (t_leg_end - t) * 1e-3

        while t < t_leg_end:
            if h > t_leg_end - t:
                h = t_leg_end - t
            if t + h == t:
                # clipped step below time resolution; the leg is done
                t = t_leg_end
                break

            k2p = k2v = k2n = k3p = k3v = k3n = 0.0
            k4p = k4v = k4n = k5p = k5v = k5n = k6p = k6v = k6n = 0.0
            # a failing stage 1 means the CURRENT state is invalid
            # (e.g. the regime switch dropped the field past the pole);
            # later-stage failures are oversized trial steps and only
            # shrink h.
            k1p, k1v, k1n, st = rhs_values(
                phi, phidot, regime, m_p, m, phi_star, a_coeff, rho_init,
                drive_amp)
            if st != 0:
                return rows, st
            yp = phi + h * 0.25 * k1p
            yv = phidot + h * 0.25 * k1v
            k2p, k2v, k2n, st = rhs_values(
                yp, yv, regime, m_p, m, phi_star, a_coeff, rho_init,
                drive_amp)
            if st == 0:
                yp = phi + h * (3.0 / 32.0 * k1p + 9.0 / 32.0 * k2p)
                yv = phidot + h * (3.0 / 32.0 * k1v + 9.0 / 32.0 * k2v)
                k3p, k3v, k3n, st = rhs_values(
                    yp, yv, regime, m_p, m, phi_star, a_coeff, rho_init,
                    drive_amp)
            if st == 0:
                yp = phi + h * (1932.0 / 2197.0 * k1p
                                - 7200.0 / 2197.0 * k2p
                                + 7296.0 / 2197.0 * k3p)
                yv = phidot + h * (1932.0 / 2197.0 * k1v
                                   - 7200.0 / 2197.0 * k2v
                                   + 7296.0 / 2197.0 * k3v)
                k4p, k4v, k4n, st = rhs_values(
                    yp, yv, regime, m_p, m, phi_star, a_coeff, rho_init,
                    drive_amp)
            if st == 0:
                yp = phi + h * (439.0 / 216.0 * k1p - 8.0 * k2p
                                + 3680.0 / 513.0 * k3p
                                - 845.0 / 4104.0 * k4p)
                yv = phidot + h * (439.0 / 216.0 * k1v - 8.0 * k2v
                                   + 3680.0 / 513.0 * k3v
                                   - 845.0 / 4104.0 * k4v)
                k5p, k5v, k5n, st = rhs_values(
                    yp, yv, regime, m_p, m, phi_star, a_coeff, rho_init,
                    drive_amp)
            if st == 0:
                yp = phi + h * (-8.0 / 27.0 * k1p + 2.0 * k2p
                                - 3544.0 / 2565.0 * k3p
                                + 1859.0 / 4104.0 * k4p - 11.0 / 40.0 * k5p)
                yv = phidot + h * (-8.0 / 27.0 * k1v + 2.0 * k2v
                                   - 3544.0 / 2565.0 * k3v
                                   + 1859.0 / 4104.0 * k4v
                                   - 11.0 / 40.0 * k5v)
                k6p, k6v, k6n, st = rhs_values(
                    yp, yv, regime, m_p, m, phi_star, a_coeff, rho_init,
                    drive_amp)
            if st != 0:
                h *= 0.2
                if h < 1e-14:
                    return rows, STATUS_STEP_UNDERFLOW
                continue

            new_phi = phi + h * (25.0 / 216.0 * k1p + 1408.0 / 2565.0 * k3p
                                 + 2197.0 / 4104.0 * k4p - 0.2 * k5p)
            new_phidot = phidot + h * (25.0 / 216.0 * k1v
                                       + 1408.0 / 2565.0 * k3v
                                       + 2197.0 / 4104.0 * k4v - 0.2 * k5v)
            new_n = nefold + h * (25.0 / 216.0 * k1n + 1408.0 / 2565.0 * k3n
                                  + 2197.0 / 4104.0 * k4n - 0.2 * k5n)

            errp = h * (k1p / 360.0 - 128.0 / 4275.0 * k3p
                        - 2197.0 / 75240.0 * k4p + k5p / 50.0
                        + 2.0 / 55.0 * k6p)
            errv = h * (k1v / 360.0 - 128.0 / 4275.0 * k3v
                        - 2197.0 / 75240.0 * k4v + k5v / 50.0
                        + 2.0 / 55.0 * k6v)
            errn = h * (k1n / 360.0 - 128.0 / 4275.0 * k3n
                        - 2197.0 / 75240.0 * k4n + k5n / 50.0
                        + 2.0 / 55.0 * k6n)

            sp = atol + rtol * max(abs(phi), abs(new_phi))
            sv = atol + rtol * max(abs(phidot), abs(new_phidot))
            sn = atol + rtol * max(abs(nefold), abs(new_n))
            rp = abs(errp) / sp
            rv = abs(errv) / sv
            rn = abs(errn) / sn
            big = max(rp, rv, rn)
            if big > 1e100:
                # squaring would overflow; any such step is rejected anyway
                err = big
            else:
                err = np.sqrt((rp ** 2 + rv ** 2 + rn ** 2) / 3.0)

            if not np.isfinite(err):
                h *= 0.2
                if h < 1e-14:
                    return rows, STATUS_STEP_UNDERFLOW
                continue

            if err <= 1.0:
                f0, f1, hub, st = rhs_values(
                    new_phi, new_phidot, regime, m_p, m, phi_star, a_coeff,
                    rho_init, drive_amp)
                if st != 0:
                    # accepted step landed in an invalid state; shrink
                    h *= 0.2
                    if h < 1e-14:
                        return rows, STATUS_STEP_UNDERFLOW
                    continue
                t = t + h
                phi = new_phi
                phidot = new_phidot
                nefold = new_n
                if rows >= max_rows:
                    return rows, STATUS_ROW_OVERFLOW
                out_t[rows] = t
                out_phi[rows] = phi
                out_phidot[rows] = phidot
                out_h[rows] = hub
                out_n[rows] = nefold
                rows += 1
                if stop_slow_roll and hub > 0.0:
                    eps = _FOUR_PI * phidot * phidot / (m_p * m_p * hub * hub)
                    if eps >= 1.0:
                        return rows, STATUS_SLOW_ROLL
                if err == 0.0:
                    fac = 5.0
                else:
                    fac = 0.9 * err ** -0.2
                    if fac > 5.0:
                        fac = 5.0
                    elif fac < 0.2:
                        fac = 0.2
                h *= fac
            else:
                fac = 0.9 * err ** -0.2
                if fac < 0.2:
                    fac = 0.2
                h *= fac
                if h < 1e-14:
                    return rows, STATUS_STEP_UNDERFLOW

    return rows, STATUS_T_END
