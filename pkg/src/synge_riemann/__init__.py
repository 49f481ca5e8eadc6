"""Exact Riemann solver for the 1-D relativistic Euler equations with the
Synge (relativistic kinetic theory) equation of state, for rarefied
monatomic and diatomic gases."""

from . import bessel, eos, riemann, verify, waves
from .eos import FluidState, GasKind, ThermoPoint, Units
from .errors import (
    AccuracyWindowWarning,
    BracketError,
    ConvergenceError,
    DomainError,
    SyngeError,
    WindowError,
)
from .riemann import RiemannInput, RiemannSolution, Wave, sample, solve

__version__ = "0.1.0"

__all__ = [
    "AccuracyWindowWarning",
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "FluidState",
    "GasKind",
    "RiemannInput",
    "RiemannSolution",
    "SyngeError",
    "ThermoPoint",
    "Units",
    "Wave",
    "WindowError",
    "bessel",
    "eos",
    "riemann",
    "sample",
    "solve",
    "verify",
    "waves",
]
