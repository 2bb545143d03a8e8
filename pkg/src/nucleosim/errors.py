"""Exception hierarchy shared by all nucleosim modules.

Each error maps to a distinct CLI exit code (see cli.EXIT_CODES).
"""


class NucleosimError(Exception):
    """Base class for all package errors."""


class ParseError(NucleosimError):
    """Malformed config document (reported with a line number)."""


class ValidationError(NucleosimError):
    """A parameter or precondition invariant is violated."""


class DomainError(NucleosimError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(NucleosimError):
    """Denominator 1 + A*phi^3 of the rational regime potential is <= 0."""


class GridError(NucleosimError):
    """Spatial grid too small or too narrow to hold a field profile."""


class StepError(NucleosimError):
    """Adaptive step-size controller underflowed (stiff/singular run)."""


class NoExtremumError(NucleosimError):
    """Derivative has no sign change in the search interval."""


class DegenerateError(NucleosimError):
    """True and false vacua are energy-degenerate; no thin-wall picture."""


class CalibrationError(NucleosimError):
    """No parameters in the search box reach the requested energy gap."""
