"""Barrier option pricing under time-dependent CEV and CIR models.

Two semi-analytic routes (Bessel potentials and generalized integral
transforms) cross-validated against a Crank-Nicolson finite-difference
benchmark. See README.md for the CLI and the acceptance suite.
"""
from . import specfun, models, green, volterra, bp, git, fd

__all__ = ["specfun", "models", "green", "volterra", "bp", "git", "fd"]
__version__ = "0.1.0"
