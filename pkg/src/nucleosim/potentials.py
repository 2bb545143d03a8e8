"""Three-regime inflaton potentials and their time schedule.

Regime 1 (t <= t_p) is a tilted sine-Gordon well with an optional small
linear driving term, regime 2 (t_p < t < t_p + K*delta_t) a harmonic
potential softened by a cubic denominator, and regime 3 (later times) the
plain harmonic potential of chaotic inflation. The "much greater than"
onset of regime 3 is operationalized as K multiples of delta_t past t_p.

All functions are pure and accept scalars or numpy arrays in ``phi``.
Natural units: hbar = c = 1 and the Planck mass/time default to 1.
"""

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import PoleError, ValidationError

TWO_PI = 2.0 * np.pi


class RegimeTag(IntEnum):
    """Which leg of the potential schedule applies; ordered by onset time."""

    REGIME1 = 1
    REGIME2 = 2
    REGIME3 = 3


@dataclass(frozen=True)
class ModelParams:
    """Scalar-field model constants in Planck-natural units.

    drive_amp is capped at 1% of the cosine-well amplitude m_p**2/2 so the
    driving term stays a small perturbation of the sine-Gordon potential.
    """

    m_p: float = 1.0
    m: float = 0.1
    phi_star: float = 0.0
    a_coeff: float = 1.0
    lambda_coupling: float = 1.0
    rho_init: float = 0.0
    drive_amp: float = 0.0
    t_p: float = 1.0
    delta_t: float = 0.1
    k_mult: float = 10.0

    def __post_init__(self):
        if not self.m_p > 0:
            raise ValidationError(f"m_p must be positive, got {self.m_p}")
        if not self.m > 0:
            raise ValidationError(f"m must be positive, got {self.m}")
        if not self.m < self.m_p:
            raise ValidationError(
                f"inflaton mass must satisfy m < m_p, got m={self.m}, "
                f"m_p={self.m_p}")
        if self.a_coeff < 0:
            raise ValidationError(f"a_coeff must be >= 0, got {self.a_coeff}")
        if self.rho_init < 0:
            raise ValidationError(
                f"rho_init must be >= 0, got {self.rho_init}")
        if not self.t_p > 0:
            raise ValidationError(f"t_p must be positive, got {self.t_p}")
        if not self.delta_t > 0:
            raise ValidationError(
                f"delta_t must be positive, got {self.delta_t}")
        if not self.k_mult > 0:
            raise ValidationError(
                f"k_mult must be positive, got {self.k_mult}")
        if abs(self.drive_amp) > 0.01 * self.m_p ** 2 / 2.0:
            raise ValidationError(
                f"|drive_amp| must not exceed 0.01*m_p^2/2 = "
                f"{0.01 * self.m_p ** 2 / 2.0}, got {self.drive_amp}")

    @property
    def g_newton(self):
        """Gravitational constant 1/m_p^2 (unity at the default m_p)."""
        return 1.0 / (self.m_p * self.m_p)

    @property
    def regime3_onset(self):
        """Start time of regime 3: t_p + k_mult*delta_t."""
        return self.t_p + self.k_mult * self.delta_t


def v1(phi, p: ModelParams):
    """Tilted sine-Gordon potential (m_p^2/2)(1-cos phi) + (m^2/2)(phi-phi*)^2."""
    return 0.5 * p.m_p ** 2 * (1.0 - np.cos(phi)) \
        + 0.5 * p.m ** 2 * (phi - p.phi_star) ** 2


def v_total(phi, p: ModelParams):
    """v1 shifted by the constant initial energy density rho_init."""
    return p.rho_init + v1(phi, p)


def v_brane(phi, psi, p: ModelParams):
    """Two-field parent potential whose radial direction psi freezes out.

    (1/4)(psi^2 - m_p^2)^2 + (lambda/2) phi^2 psi^2 + v1(phi); at psi = 0
    it reduces to v1(phi) + m_p^4/4.
    """
    return 0.25 * (psi ** 2 - p.m_p ** 2) ** 2 \
        + 0.5 * p.lambda_coupling * phi ** 2 * psi ** 2 + v1(phi, p)


def v2(phi, p: ModelParams):
    """Softened harmonic potential (m^2 phi^2 / 2) / (1 + A phi^3).

    Raises PoleError when the denominator is not positive (reachable only
    for phi < 0 with A > 0).
    """
    den = 1.0 + p.a_coeff * phi ** 3
    if np.any(np.asarray(den) <= 0.0):
        raise PoleError(
            f"1 + A*phi^3 <= 0 (A={p.a_coeff}); rational potential "
            "undefined at this field value")
    return 0.5 * p.m ** 2 * phi ** 2 / den


def v3(phi, p: ModelParams):
    """Chaotic-inflation harmonic potential m^2 phi^2 / 2."""
    return 0.5 * p.m ** 2 * phi ** 2


def dv(regime: RegimeTag, phi, p: ModelParams):
    """Analytic d/dphi of the regime potential (drive tilt excluded)."""
    if regime == RegimeTag.REGIME1:
        return 0.5 * p.m_p ** 2 * np.sin(phi) + p.m ** 2 * (phi - p.phi_star)
    if regime == RegimeTag.REGIME2:
        den = 1.0 + p.a_coeff * phi ** 3
        if np.any(np.asarray(den) <= 0.0):
            raise PoleError(
                f"1 + A*phi^3 <= 0 (A={p.a_coeff}); derivative undefined")
        return p.m ** 2 * phi * (1.0 - 0.5 * p.a_coeff * phi ** 3) / den ** 2
    return p.m ** 2 * phi


def d2v1(phi, p: ModelParams):
    """Second derivative of v1, used for curvature at extrema."""
    return 0.5 * p.m_p ** 2 * np.cos(phi) + p.m ** 2


def regime_at(t, p: ModelParams) -> RegimeTag:
    """Schedule lookup: regime 1 up to t_p, regime 3 from t_p + K*delta_t."""
    if t <= p.t_p:
        return RegimeTag.REGIME1
    if t < p.regime3_onset:
        return RegimeTag.REGIME2
    return RegimeTag.REGIME3


def v_effective(phi, t, p: ModelParams):
    """Potential actually in force at time t.

    Regime 1 includes the constant rho_init and the linear driving tilt;
    the value is not continuous in t at the switch times.
    """
    regime = regime_at(t, p)
    if regime == RegimeTag.REGIME1:
        return v_total(phi, p) + p.drive_amp * phi
    if regime == RegimeTag.REGIME2:
        return v2(phi, p)
    return v3(phi, p)
