"""Quantum bouncer: a particle in a uniform field g above a rigid floor at x = 0.

Levels are E_n = (m g^2 hbar^2 / 2)^(1/3) |a_n| with a_n the negative zeros of Ai. The
unbounded linear potential has a continuous spectrum, so the floor is what makes the
Airy roots alone fix the levels. The comparison with the accelerated frame is made on
spacings, not absolute energies, since the two systems have different zero points.
"""

from __future__ import annotations

import logging
import math
import statistics
from dataclasses import dataclass

import numpy as np

from rindler.errors import ParameterError
from rindler.rindler_spectrum import energy_level, level_spacing
from rindler.specfun import airy_zero
from rindler.units_params import PhysicalParams

logger = logging.getLogger(__name__)

EQP_COLUMNS = ("system", "n", "energy", "spacing")
MIN_COMPARISON_LEVELS = 3


@dataclass(frozen=True)
class BouncerLevel:
    n: int
    airy_zero: float
    energy: float


@dataclass(frozen=True)
class SpacingProfile:
    """Levels, their spacings and the spread statistics of one system."""

    system: str
    levels: tuple[int, ...]
    energies: tuple[float, ...]
    spacings: tuple[float, ...]
    spacing_stddev: float
    max_relative_variation: float

    @property
    def strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.spacings, self.spacings[1:]))


@dataclass(frozen=True)
class EqpDeviationReport:
    rindler: SpacingProfile
    bouncer: SpacingProfile

    @property
    def profiles_coincide(self) -> bool:
        return self.rindler.spacings == self.bouncer.spacings

    def rows(self) -> list[dict[str, object]]:
        rows: list[dict[str, object]] = []
        for profile in (self.rindler, self.bouncer):
            for n, energy, spacing in zip(profile.levels, profile.energies, profile.spacings):
                rows.append({"system": profile.system, "n": n, "energy": energy, "spacing": spacing})
        return rows

    def summary(self) -> dict[str, object]:
        return {
            profile.system: {
                "spacing_stddev": profile.spacing_stddev,
                "max_relative_variation": profile.max_relative_variation,
                "strictly_decreasing": profile.strictly_decreasing,
            }
            for profile in (self.rindler, self.bouncer)
        }


def bouncer_prefactor(m: float, g: float, hbar: float) -> float:
    return (m * g**2 * hbar**2 / 2.0) ** (1.0 / 3.0)


def bouncer_energy(m: float, g: float, hbar: float, n: int) -> float:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"Bouncer level must be an integer >= 1, got {n!r}")
    for name, value in (("m", m), ("g", g), ("hbar", hbar)):
        if not (math.isfinite(value) and value > 0.0):
            raise ParameterError(f"{name} must be > 0, got {value}")
    return bouncer_prefactor(m, g, hbar) * abs(airy_zero(int(n)))


def bouncer_spectrum(m: float, g: float, hbar: float, k: int) -> list[BouncerLevel]:
    """Levels 1 .. k."""
    return [BouncerLevel(n=n, airy_zero=airy_zero(n), energy=bouncer_energy(m, g, hbar, n)) for n in range(1, k + 1)]


def _spread(spacings: list[float]) -> tuple[float, float]:
    mean = statistics.fmean(spacings)
    return statistics.pstdev(spacings), (max(spacings) - min(spacings)) / mean


def eqp_deviation_report(params: PhysicalParams, k: int) -> EqpDeviationReport:
    """Spacing profiles for levels 1..k of the accelerated frame and of its gravitational twin (g = alpha)."""
    if k < MIN_COMPARISON_LEVELS:
        raise ParameterError(f"Comparison needs at least {MIN_COMPARISON_LEVELS} levels, got k={k}")

    levels = tuple(range(1, k + 1))
    rindler_energies = [energy_level(params, n) for n in levels]
    rindler_spacings = [level_spacing(params, n) for n in levels]
    rindler_std, rindler_var = _spread(rindler_spacings)

    bouncer = bouncer_spectrum(params.m, params.alpha, params.hbar, k + 1)
    bouncer_energies = [level.energy for level in bouncer[:k]]
    bouncer_spacings = [b.energy - a.energy for a, b in zip(bouncer, bouncer[1:])]
    bouncer_std, bouncer_var = _spread(bouncer_spacings)

    report = EqpDeviationReport(
        rindler=SpacingProfile(
            system="rindler",
            levels=levels,
            energies=tuple(rindler_energies),
            spacings=tuple(rindler_spacings),
            spacing_stddev=rindler_std,
            max_relative_variation=rindler_var,
        ),
        bouncer=SpacingProfile(
            system="bouncer",
            levels=levels,
            energies=tuple(bouncer_energies),
            spacings=tuple(bouncer_spacings),
            spacing_stddev=bouncer_std,
            max_relative_variation=bouncer_var,
        ),
    )
    logger.info(
        f"📊 Spacing variation: rindler={rindler_var:.3g}, bouncer={bouncer_var:.3g} over {k} levels"
    )
    return report
