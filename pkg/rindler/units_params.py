"""Physical parameters, derived spectral constants and coordinate maps.

Every other module reads its symbols from here. All values are plain floats in
whatever consistent unit system the caller chooses; ``natural_units`` gives the
canonical m = c = hbar = 1 configuration used throughout the tests.
"""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Callable, Mapping
from dataclasses import asdict, dataclass
from typing import Any

from rindler.errors import HorizonError, ParameterError

logger = logging.getLogger(__name__)

PARAM_KEYS = ("m", "alpha", "c", "hbar", "p_y", "p_z", "theta")


@dataclass(frozen=True)
class PhysicalParams:
    """Inputs of one Rindler-frame system.

    ``theta`` is the scalar x-y noncommutativity; orientation lives in the Bopp shift.
    """

    m: float
    alpha: float
    c: float
    hbar: float
    p_y: float = 0.0
    p_z: float = 0.0
    theta: float = 0.0

    def __post_init__(self) -> None:
        for key in PARAM_KEYS:
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParameterError(f"Parameter '{key}' must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise ParameterError(f"Parameter '{key}' must be finite, got {value!r}")
            object.__setattr__(self, key, float(value))

        for key in ("m", "alpha", "c", "hbar"):
            if getattr(self, key) <= 0.0:
                raise ParameterError(f"Parameter '{key}' must be > 0, got {getattr(self, key)}")
        if self.theta < 0.0:
            raise ParameterError(f"theta must be >= 0 (orientation is fixed by the Bopp shift), got {self.theta}")

    @property
    def transverse_momentum_sq(self) -> float:
        return self.p_y**2 + self.p_z**2

    def to_dict(self) -> dict[str, float]:
        """Convert to dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class DerivedConstants:
    """Spectral constants for a trial energy ``energy``."""

    energy: float
    E_tilde: float  # noqa: N815
    kappa: float
    gamma: float
    sigma: float
    omega: float


@dataclass(frozen=True)
class CoordinateMaps:
    """Forward and inverse maps between x, xi = 1 + alpha x / c^2 and zeta = sqrt(gamma) xi."""

    xi_of_x: Callable[[float], float]
    x_of_xi: Callable[[float], float]
    zeta_of_xi: Callable[[float], float]
    xi_of_zeta: Callable[[float], float]
    zeta_of_x: Callable[[float], float]
    x_of_zeta: Callable[[float], float]


def natural_units(alpha: float = 1.0, theta: float = 0.0, p_y: float = 0.0, p_z: float = 0.0) -> PhysicalParams:
    """Parameters with m = c = hbar = 1."""
    return PhysicalParams(m=1.0, alpha=alpha, c=1.0, hbar=1.0, p_y=p_y, p_z=p_z, theta=theta)


def transverse_energy(params: PhysicalParams) -> float:
    """E_tilde = m c^2 + (p_y^2 + p_z^2) / 2m."""
    return params.m * params.c**2 + params.transverse_momentum_sq / (2.0 * params.m)


def horizon_position(params: PhysicalParams) -> float:
    """x at which xi vanishes; the accelerated chart covers x > -c^2/alpha only."""
    return -params.c**2 / params.alpha


def derive_constants(params: PhysicalParams, E: float) -> DerivedConstants:  # noqa: N803
    """Compute E_tilde, kappa, gamma, sigma and omega for a trial energy E.

    E is an input, not an eigenvalue: quantization (sigma = n + 1/2) is imposed downstream.
    """
    if isinstance(E, bool) or not isinstance(E, (int, float)) or not math.isfinite(E):
        raise ParameterError(f"Energy must be a finite real number, got {E!r}")

    m, c, hbar, alpha = params.m, params.c, params.hbar, params.alpha
    scale = hbar**2 * alpha**2
    e_tilde = transverse_energy(params)
    kappa = 2.0 * m * c**4 * float(E) / scale
    gamma = 8.0 * m * c**4 * e_tilde / scale
    return DerivedConstants(
        energy=float(E),
        E_tilde=e_tilde,
        kappa=kappa,
        gamma=gamma,
        sigma=kappa / math.sqrt(gamma),
        omega=math.sqrt(2.0) * alpha / c,
    )


def coordinate_maps(params: PhysicalParams, dc: DerivedConstants) -> CoordinateMaps:
    """Build the x <-> xi <-> zeta maps.

    The forward maps accept any real x; the inverse maps reject xi <= 0 (zeta <= 0),
    which lies at or beyond the horizon.
    """
    if dc.gamma <= 0.0:
        raise ParameterError(f"gamma must be > 0, got {dc.gamma}")

    scale = params.alpha / params.c**2
    root_gamma = math.sqrt(dc.gamma)

    def xi_of_x(x: float) -> float:
        return 1.0 + scale * x

    def x_of_xi(xi: float) -> float:
        if xi <= 0.0:
            raise HorizonError(f"xi={xi} is at or beyond the Rindler horizon")
        return (xi - 1.0) / scale

    def zeta_of_xi(xi: float) -> float:
        return root_gamma * xi

    def xi_of_zeta(zeta: float) -> float:
        if zeta <= 0.0:
            raise HorizonError(f"zeta={zeta} is at or beyond the Rindler horizon")
        return zeta / root_gamma

    def zeta_of_x(x: float) -> float:
        return zeta_of_xi(xi_of_x(x))

    def x_of_zeta(zeta: float) -> float:
        return x_of_xi(xi_of_zeta(zeta))

    return CoordinateMaps(
        xi_of_x=xi_of_x,
        x_of_xi=x_of_xi,
        zeta_of_xi=zeta_of_xi,
        xi_of_zeta=xi_of_zeta,
        zeta_of_x=zeta_of_x,
        x_of_zeta=x_of_zeta,
    )


def params_to_dict(params: PhysicalParams) -> dict[str, float]:
    return params.to_dict()


def params_from_mapping(data: Mapping[str, Any], defaults: PhysicalParams | None = None) -> PhysicalParams:
    """Build parameters from a flat mapping, filling gaps from ``defaults`` (natural units if None)."""
    unknown = sorted(set(data) - set(PARAM_KEYS))
    if unknown:
        raise ParameterError(f"Unknown parameter keys: {', '.join(unknown)}")

    base = (defaults or natural_units()).to_dict()
    base.update(data)
    return PhysicalParams(**base)


def params_from_json(text: str) -> PhysicalParams:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterError(f"Invalid parameter JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParameterError("Parameter JSON must be an object")
    return params_from_mapping(data)
