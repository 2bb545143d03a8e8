"""Thin-wall pair energetics and uncertainty-principle nucleation scales.

The wall pair is treated as two zero-thickness kinks enclosing a stretch
of true vacuum, so its energy is affine in the separation: twice the wall
tension minus gap times extent. The available fluctuation budget follows
delta_t * delta_e = hbar (= 1 here), and the dilaton relation
l_p^2/lambda_s^2 = e^phi fixes the string-length estimate.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateError, ValidationError

GAP_FLOOR = 1e-14
PLANCK_LENGTH = 1.0


@dataclass(frozen=True)
class NucleationScales:
    """Fluctuation time/energy plus the derived pair and dilaton lengths.

    r_star and lambda_s may be absent when only the uncertainty pair is
    known; every present field must be positive (r_star may be zero when
    the budget already covers both walls).
    """

    delta_t: float
    delta_e: float
    r_star: Optional[float] = None
    lambda_s: Optional[float] = None

    def __post_init__(self):
        if not self.delta_t > 0 or not self.delta_e > 0:
            raise ValidationError("delta_t and delta_e must be positive")
        if self.r_star is not None and self.r_star < 0:
            raise ValidationError("r_star must be >= 0")
        if self.lambda_s is not None and not self.lambda_s > 0:
            raise ValidationError("lambda_s must be positive")


def pair_energy_thin_wall(r: float, e_kink: float, gap: float) -> float:
    """Energy of a wall pair at separation r: 2*e_kink - gap*r."""
    if r < 0:
        raise ValidationError(f"separation must be >= 0, got {r}")
    if not e_kink > 0:
        raise ValidationError(f"e_kink must be positive, got {e_kink}")
    if gap < 0:
        raise ValidationError(f"gap must be >= 0, got {gap}")
    return 2.0 * e_kink - gap * r


def critical_separation(e_kink: float, gap: float, budget: float) -> float:
    """Separation beyond which the pair fits the energy budget.

    Inverts the thin-wall energy: r* = (2*e_kink - budget)/gap, clipped at
    zero when the budget already exceeds both wall tensions. Degenerate
    vacua (gap ~ 0) cannot drive the walls apart at all.
    """
    if gap <= GAP_FLOOR:
        raise DegenerateError(
            f"gap={gap:.3e} is degenerate; no drive separates the pair")
    if budget >= 2.0 * e_kink:
        return 0.0
    return (2.0 * e_kink - budget) / gap


def heisenberg_scales(delta_t: float) -> NucleationScales:
    """Fluctuation energy conjugate to a fluctuation time, delta_e = 1/delta_t."""
    if not delta_t > 0:
        raise ValidationError(f"delta_t must be positive, got {delta_t}")
    return NucleationScales(delta_t=delta_t, delta_e=1.0 / delta_t)


def dilaton_radius(phi: float):
    """Gauge coupling and string length from the dilaton value.

    Returns (alpha_gauge, lambda_s) with lambda_s = l_p * e^{-phi/2} and
    alpha_gauge computed as l_p^2/lambda_s^2, so that identity holds to
    the bit; it equals e^phi to rounding.
    """
    lambda_s = PLANCK_LENGTH * math.exp(-phi / 2.0)
    alpha_gauge = PLANCK_LENGTH ** 2 / lambda_s ** 2
    return alpha_gauge, lambda_s
