"""Analytic spectrum of a free particle seen from the uniformly accelerated frame.

Levels are E_n = (n + 1/2) hbar alpha sqrt(p_y^2 + p_z^2 + 2 m^2 c^2) / (m c^2), equally spaced
by hbar alpha sqrt(...)/(m c^2), which is hbar * omega with omega = sqrt(2) alpha / c when the
transverse momenta vanish. Radial eigenfunctions are exp(-zeta/2) L_n(zeta), normalized
under d zeta on (0, inf).

As alpha -> 0 every level collapses to zero instead of approaching the free continuum plus
m c^2; the formula is used as stated.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from rindler.errors import HorizonError, ParameterError
from rindler.specfun import ArrayLike, laguerre, laguerre_derivative, laguerre_second_derivative
from rindler.units_params import PhysicalParams, coordinate_maps, derive_constants, horizon_position

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ("n", "sigma", "energy", "spacing")


@dataclass(frozen=True)
class EigenState:
    """One quantized level."""

    n: int
    sigma: float
    energy: float
    phi: Callable[[ArrayLike], ArrayLike]


def _check_level(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ParameterError(f"Level index must be an integer >= 0, got {n!r}")
    return int(n)


def level_quantum(params: PhysicalParams) -> float:
    """Spacing between neighbouring levels, hbar alpha sqrt(p_y^2 + p_z^2 + 2 m^2 c^2) / (m c^2)."""
    root = math.sqrt(params.transverse_momentum_sq + 2.0 * params.m**2 * params.c**2)
    return params.hbar * params.alpha * root / (params.m * params.c**2)


def energy_level(params: PhysicalParams, n: int) -> float:
    n = _check_level(n)
    return (n + 0.5) * level_quantum(params)


def level_spacing(params: PhysicalParams, n: int) -> float:
    """E_{n+1} - E_n, which is the same for every n."""
    _check_level(n)
    return level_quantum(params)


def eigenfunction(n: int) -> Callable[[ArrayLike], ArrayLike]:
    """zeta -> exp(-zeta/2) L_n(zeta); unit norm under d zeta on (0, inf)."""
    n = _check_level(n)

    def phi(zeta: ArrayLike) -> ArrayLike:
        return np.exp(-np.asarray(zeta, dtype=np.float64) / 2.0) * laguerre(n, zeta)  # type: ignore[no-any-return]

    return phi


def eigenfunction_derivative(n: int) -> Callable[[ArrayLike], ArrayLike]:
    """d/d zeta of ``eigenfunction(n)``."""
    n = _check_level(n)

    def dphi(zeta: ArrayLike) -> ArrayLike:
        z = np.asarray(zeta, dtype=np.float64)
        return np.exp(-z / 2.0) * (laguerre_derivative(n, zeta) - 0.5 * laguerre(n, zeta))  # type: ignore[no-any-return]

    return dphi


def eigenfunction_second_derivative(n: int) -> Callable[[ArrayLike], ArrayLike]:
    """d^2/d zeta^2 of ``eigenfunction(n)``: exp(-zeta/2)(L'' - L' + L/4)."""
    n = _check_level(n)

    def d2phi(zeta: ArrayLike) -> ArrayLike:
        z = np.asarray(zeta, dtype=np.float64)
        return np.exp(-z / 2.0) * (  # type: ignore[no-any-return]
            laguerre_second_derivative(n, zeta) - laguerre_derivative(n, zeta) + 0.25 * laguerre(n, zeta)
        )

    return d2phi


def eigenstate(params: PhysicalParams, n: int) -> EigenState:
    n = _check_level(n)
    return EigenState(n=n, sigma=n + 0.5, energy=energy_level(params, n), phi=eigenfunction(n))


def wavefunction_norm(params: PhysicalParams) -> float:
    """N such that the integral of |psi|^2 dx over the wedge is 1 (per unit transverse area).

    d zeta = sqrt(gamma) alpha / c^2 dx and the d zeta norm of phi_n is 1.
    """
    gamma = derive_constants(params, 0.0).gamma
    return math.sqrt(params.alpha * math.sqrt(gamma) / params.c**2)


def full_wavefunction(params: PhysicalParams, n: int) -> Callable[[float, float, float], complex]:
    """(x, y, z) -> N exp(-zeta(x)/2) L_n(zeta(x)) exp(-i p_y y / hbar) exp(-i p_z z / hbar).

    Points at or beyond the horizon (xi <= 0) raise HorizonError.
    """
    n = _check_level(n)
    dc = derive_constants(params, energy_level(params, n))
    maps = coordinate_maps(params, dc)
    phi = eigenfunction(n)
    norm = wavefunction_norm(params)
    horizon = horizon_position(params)

    def psi(x: float, y: float = 0.0, z: float = 0.0) -> complex:
        if x <= horizon:
            raise HorizonError(f"x={x} is at or beyond the Rindler horizon at x={horizon:.6g}")
        radial = norm * float(phi(maps.zeta_of_xi(maps.xi_of_x(x))))
        phase = cmath.exp(-1j * (params.p_y * y + params.p_z * z) / params.hbar)
        return radial * phase

    return psi


def spectrum_consistency(params: PhysicalParams, n: int) -> float:
    """|sigma(E_n) - (n + 1/2)|, closing energy_level back through derive_constants."""
    n = _check_level(n)
    sigma = derive_constants(params, energy_level(params, n)).sigma
    return abs(sigma - (n + 0.5))


def spectrum_table(params: PhysicalParams, k: int) -> list[dict[str, float | int]]:
    """Rows {n, sigma, energy, spacing} for levels 0 .. k-1."""
    if k < 1:
        raise ParameterError(f"Need at least one level, got k={k}")
    spacing = level_quantum(params)
    rows: list[dict[str, float | int]] = [
        {"n": n, "sigma": n + 0.5, "energy": energy_level(params, n), "spacing": spacing} for n in range(k)
    ]
    logger.info(f"Analytic spectrum: {k} levels, spacing {spacing:.10g}")
    return rows
