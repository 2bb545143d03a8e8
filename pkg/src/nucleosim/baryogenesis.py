"""Baryon-asymmetry bookkeeping against the nucleosynthesis window."""

from dataclasses import dataclass

from .errors import DomainError, ValidationError

BBN_LOWER = 2e-10
BBN_UPPER = 7e-10


@dataclass(frozen=True)
class AsymmetryInput:
    """Baryon/antibaryon number densities and entropy density."""

    n_b: float
    n_bbar: float
    s: float

    def __post_init__(self):
        if not self.s > 0:
            raise ValidationError(f"entropy density must be > 0, got {self.s}")
        if self.n_b < 0 or self.n_bbar < 0:
            raise ValidationError("number densities must be >= 0")


def eta(inp: AsymmetryInput) -> float:
    """Asymmetry parameter (n_b - n_bbar)/s, sign preserved."""
    if not inp.s > 0:
        raise DomainError(f"entropy density must be > 0, got {inp.s}")
    return (inp.n_b - inp.n_bbar) / inp.s


def in_bbn_window(eta_val: float) -> bool:
    """Strictly inside the primordial-nucleosynthesis window
    2e-10 < eta < 7e-10."""
    return BBN_LOWER < eta_val < BBN_UPPER
