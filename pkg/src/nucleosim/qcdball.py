"""Dense quark-soliton (QCD ball) mass scaling, stability and size.

The ball mass grows as B^(8/9) in the baryon charge, so the marginal cost
of adding charge falls below the nucleon mass above a critical charge;
there the ball becomes absolutely stable. Radius follows from balancing
Fermi pressure against the squeezing axion domain wall.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, ValidationError

MASS_EXPONENT = 8.0 / 9.0


class StabilityClass(Enum):
    ABSOLUTELY_STABLE = "absolutely_stable"
    METASTABLE = "metastable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class BallParams:
    """QCD-ball constants; b_soft is the working "B >> 1" threshold and
    b_c_exp the experimental floor on the critical charge (reference
    datum, not a classification input)."""

    mu: float = 1.0
    m_n: float = 1.0
    sigma: float = 1.0
    c_tilde: float = 0.7
    b_c_exp: float = 1e20
    b_soft: float = 1e3

    def __post_init__(self):
        for name in ("mu", "m_n", "sigma", "b_c_exp", "b_soft"):
            if not getattr(self, name) > 0:
                raise ValidationError(
                    f"{name} must be positive, got {getattr(self, name)}")
        if not 0.0 < self.c_tilde <= 1.0:
            raise ValidationError(
                f"c_tilde must be in (0, 1], got {self.c_tilde}")


def ball_mass(b: float, bp: BallParams) -> float:
    """Ball mass mu * B^(8/9)."""
    if b < 1:
        raise DomainError(f"baryon charge must be >= 1, got {b}")
    return bp.mu * b ** MASS_EXPONENT


def mass_slope(b: float, bp: BallParams) -> float:
    """Marginal mass cost dM/dB = (8/9) mu B^(-1/9)."""
    if b < 1:
        raise DomainError(f"baryon charge must be >= 1, got {b}")
    return MASS_EXPONENT * bp.mu * b ** (MASS_EXPONENT - 1.0)


def critical_charge(bp: BallParams) -> float:
    """Charge where dM/dB crosses the nucleon mass: ((8 mu)/(9 m_n))^9,
    clipped below at 1."""
    return max(1.0, (8.0 * bp.mu / (9.0 * bp.m_n)) ** 9)


def stability_class(b: float, bp: BallParams) -> StabilityClass:
    """Classify a ball: absolutely stable past the critical charge when
    adding charge is cheaper than a nucleon, metastable in the
    b_soft <= B < B_c band, unstable otherwise.

    Both stable classes require B >= b_soft, the working reading of the
    "B much greater than 1" premise; a charge of a few is never a ball.
    """
    if b < 1:
        raise DomainError(f"baryon charge must be >= 1, got {b}")
    b_crit = critical_charge(bp)
    if b >= bp.b_soft and b >= b_crit and bp.m_n > mass_slope(b, bp):
        return StabilityClass.ABSOLUTELY_STABLE
    if bp.b_soft <= b < b_crit:
        return StabilityClass.METASTABLE
    return StabilityClass.UNSTABLE


def ball_radius(b: float, bp: BallParams) -> float:
    """Formation radius (c_tilde * B^(4/3) / (8 pi sigma))^(1/3)."""
    if b < 1:
        raise DomainError(f"baryon charge must be >= 1, got {b}")
    return (bp.c_tilde * b ** (4.0 / 3.0)
            / (8.0 * math.pi * bp.sigma)) ** (1.0 / 3.0)


def pressure_balance_residual(r: float, sigma: float, omega: float,
                              volume: float) -> float:
    """Surface versus Fermi pressure mismatch 2*sigma/r - (-omega/volume);
    zero when the wall tension exactly squeezes the Fermi gas."""
    if not r > 0:
        raise DomainError(f"radius must be positive, got {r}")
    if not volume > 0:
        raise DomainError(f"volume must be positive, got {volume}")
    return 2.0 * sigma / r - (-omega / volume)
