"""Rindler-frame quantum mechanics checks.

Analytic and numerical spectra of a free particle seen from a uniformly
accelerated frame, the quantum bouncer it is compared against, the
noncommutative ground-state shift and the classical effective acceleration.
"""

from rindler.errors import (
    ConfigError,
    ConvergenceError,
    HorizonError,
    ParameterError,
    QuadratureError,
    RindlerError,
)
from rindler.units_params import DerivedConstants, PhysicalParams, derive_constants, natural_units

__version__ = "1.0.0"

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "DerivedConstants",
    "HorizonError",
    "ParameterError",
    "PhysicalParams",
    "QuadratureError",
    "RindlerError",
    "derive_constants",
    "natural_units",
]
