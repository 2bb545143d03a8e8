"""Publication-style figures from nucleosim CSV artifacts."""

__version__ = "0.1.0"
