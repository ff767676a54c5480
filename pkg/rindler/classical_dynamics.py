"""Classical trajectories under the accelerated-frame Hamiltonian and its truncations.

The NLO Hamiltonian makes the observed acceleration depend on momentum,
alpha_eff = alpha (1 + p^2 / 2 m^2 c^2), while the uniform-field Hamiltonian does not.
Accelerations are measured at x = 0, where alpha_eff is exactly the d^2x/dt^2 that
Hamilton's equations give; away from x = 0 the two differ.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from rindler.errors import HorizonError, ParameterError
from rindler.units_params import PhysicalParams, horizon_position

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

TRAJECTORY_COLUMNS = ("t", "x", "p_x", "p_y", "p_z", "H", "drift")
EQP_CLASSICAL_COLUMNS = (
    "momentum",
    "a_nlo",
    "a_gravity",
    "nlo_ratio",
    "predicted_ratio",
    "nlo_drift",
    "gravity_drift",
)


class HamiltonianVariant(str, Enum):
    FULL = "full"
    LEADING = "leading"
    NLO = "nlo"
    GRAVITY = "gravity"


@dataclass(frozen=True)
class PhaseState:
    """Phase-space point (x, p) at time t."""

    x: float
    p: tuple[float, float, float]
    t: float = 0.0

    def __post_init__(self) -> None:
        p = tuple(float(component) for component in self.p)
        if len(p) != 3:
            raise ParameterError(f"Momentum must have 3 components, got {len(p)}")
        if not all(math.isfinite(v) for v in (self.x, self.t, *p)):
            raise ParameterError(f"Phase state must be finite: x={self.x}, p={p}, t={self.t}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "t", float(self.t))

    @property
    def p_sq(self) -> float:
        return sum(component**2 for component in self.p)


@dataclass(frozen=True)
class Trajectory:
    """Samples at t = i * dt: columns x, p_x, p_y, p_z of ``states``."""

    variant: HamiltonianVariant
    dt: float
    times: FloatArray
    states: FloatArray
    energies: FloatArray

    @property
    def drift(self) -> FloatArray:
        return np.abs(self.energies - self.energies[0]) / abs(self.energies[0])

    @property
    def max_drift(self) -> float:
        return float(np.max(self.drift))

    def rows(self) -> list[dict[str, float]]:
        drift = self.drift
        return [
            {
                "t": float(self.times[i]),
                "x": float(self.states[i, 0]),
                "p_x": float(self.states[i, 1]),
                "p_y": float(self.states[i, 2]),
                "p_z": float(self.states[i, 3]),
                "H": float(self.energies[i]),
                "drift": float(drift[i]),
            }
            for i in range(self.times.size)
        ]


@dataclass(frozen=True)
class ClassicalEqpRow:
    momentum: float
    a_nlo: float
    a_gravity: float
    nlo_ratio: float
    predicted_ratio: float
    nlo_drift: float
    gravity_drift: float

    def to_dict(self) -> dict[str, float]:
        return {column: getattr(self, column) for column in EQP_CLASSICAL_COLUMNS}


@dataclass(frozen=True)
class ClassicalEqpReport:
    rows: tuple[ClassicalEqpRow, ...]
    nlo_spread: float
    gravity_spread: float
    leading_gravity_max_difference: float
    trajectories: tuple[Trajectory, ...] = ()

    def summary(self) -> dict[str, float]:
        return {
            "nlo_spread": self.nlo_spread,
            "gravity_spread": self.gravity_spread,
            "leading_gravity_max_difference": self.leading_gravity_max_difference,
        }


def _xi(x: float, params: PhysicalParams) -> float:
    return 1.0 + params.alpha * x / params.c**2


def _momentum_sq(p: Sequence[float] | float) -> float:
    if isinstance(p, (int, float)):
        return float(p) ** 2
    return float(sum(float(component) ** 2 for component in p))


def hamiltonian(state: PhaseState, params: PhysicalParams, variant: HamiltonianVariant) -> float:
    """Energy of ``state``; every variant rejects states at or beyond the horizon."""
    horizon = horizon_position(params)
    if state.x <= horizon:
        raise HorizonError(f"x={state.x} is at or beyond the Rindler horizon at x={horizon:.6g}")
    xi = _xi(state.x, params)

    m, c, alpha = params.m, params.c, params.alpha
    p_sq = state.p_sq
    rest = m * c**2
    if variant is HamiltonianVariant.FULL:
        return rest * xi * math.sqrt(1.0 + p_sq / (m**2 * c**2))
    leading = rest + p_sq / (2.0 * m) + m * alpha * state.x
    if variant is HamiltonianVariant.LEADING:
        return leading
    if variant is HamiltonianVariant.NLO:
        return leading + alpha * state.x * p_sq / (2.0 * m * c**2)
    if variant is HamiltonianVariant.GRAVITY:
        return rest + p_sq / (2.0 * m) + m * alpha * state.x
    raise ParameterError(f"Unknown Hamiltonian variant: {variant!r}")


def hamiltonian_gradient(
    x: float, p: FloatArray, params: PhysicalParams, variant: HamiltonianVariant
) -> tuple[float, FloatArray]:
    """(dH/dx, dH/dp)."""
    m, c, alpha = params.m, params.c, params.alpha
    if variant is HamiltonianVariant.FULL:
        gamma_p = math.sqrt(1.0 + float(p @ p) / (m**2 * c**2))
        return m * alpha * gamma_p, _xi(x, params) * p / (m * gamma_p)
    if variant is HamiltonianVariant.NLO:
        return m * alpha + alpha * float(p @ p) / (2.0 * m * c**2), _xi(x, params) * p / m
    if variant in (HamiltonianVariant.LEADING, HamiltonianVariant.GRAVITY):
        return m * alpha, p / m
    raise ParameterError(f"Unknown Hamiltonian variant: {variant!r}")


def _rate(y: FloatArray, params: PhysicalParams, variant: HamiltonianVariant) -> FloatArray:
    dh_dx, dh_dp = hamiltonian_gradient(float(y[0]), y[1:], params, variant)
    rate = np.zeros(4)
    rate[0] = dh_dp[0]
    rate[1] = -dh_dx
    return rate


def effective_acceleration(p: Sequence[float] | float, params: PhysicalParams) -> float:
    """alpha (1 + p^2 / 2 m^2 c^2)."""
    return params.alpha * (1.0 + _momentum_sq(p) / (2.0 * params.m**2 * params.c**2))


def relativistic_kinetic_correction(p: Sequence[float] | float, params: PhysicalParams) -> float:
    """-p^4 / 8 m^3 c^2: the O(1/c^2) kinetic term the NLO Hamiltonian leaves out."""
    return -_momentum_sq(p) ** 2 / (8.0 * params.m**3 * params.c**2)


def integrate(
    state0: PhaseState, params: PhysicalParams, variant: HamiltonianVariant, T: float, dt: float  # noqa: N803
) -> Trajectory:
    """Fixed-step RK4 on x' = dH/dp_x, p_x' = -dH/dx; transverse momenta are constants of motion."""
    if not (math.isfinite(dt) and dt > 0.0):
        raise ParameterError(f"dt must be > 0, got {dt}")
    if not (math.isfinite(T) and T >= dt):
        raise ParameterError(f"T must be >= dt, got T={T}, dt={dt}")

    horizon = horizon_position(params)
    energy0 = hamiltonian(state0, params, variant)
    steps = int(round(T / dt))
    states = np.empty((steps + 1, 4))
    energies = np.empty(steps + 1)
    states[0] = (state0.x, *state0.p)
    energies[0] = energy0

    y = states[0].copy()
    for i in range(1, steps + 1):
        k1 = _rate(y, params, variant)
        k2 = _rate(y + 0.5 * dt * k1, params, variant)
        k3 = _rate(y + 0.5 * dt * k2, params, variant)
        k4 = _rate(y + dt * k3, params, variant)
        y = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

        if not np.all(np.isfinite(y)):
            raise ParameterError(f"{variant.value} trajectory became non-finite at step {i}")
        if y[0] <= horizon:
            raise HorizonError(f"{variant.value} trajectory crossed the horizon at t={i * dt:.6g} (x={y[0]:.6g})")
        states[i] = y
        energies[i] = hamiltonian(PhaseState(x=float(y[0]), p=(y[1], y[2], y[3])), params, variant)

    trajectory = Trajectory(
        variant=variant,
        dt=float(dt),
        times=np.arange(steps + 1) * float(dt),
        states=states,
        energies=energies,
    )
    logger.debug(f"{variant.value} trajectory: {steps} RK4 steps, max drift {trajectory.max_drift:.3e}")
    return trajectory


def initial_acceleration(trajectory: Trajectory) -> float:
    """d^2x/dt^2 at t = 0 from the first three samples."""
    if trajectory.times.size < 3:
        raise ParameterError("Need at least three samples to measure an acceleration")
    x0, x1, x2 = trajectory.states[:3, 0]
    return float((x0 - 2.0 * x1 + x2) / trajectory.dt**2)


def measurement_window(params: PhysicalParams, p_list: Sequence[float], T: float) -> float:  # noqa: N803
    """min(T, c / 2 sqrt(alpha a_max)) with a_max the largest effective acceleration in ``p_list``.

    Starting from rest at x = 0, a particle falling at a_max stays at xi >= 7/8 within the window.
    """
    if not (math.isfinite(T) and T > 0.0):
        raise ParameterError(f"T must be > 0, got {T}")
    a_max = max(effective_acceleration(float(q), params) for q in p_list)
    return min(T, 0.5 * params.c / math.sqrt(params.alpha * a_max))


def eqp_classical_report(params: PhysicalParams, p_list: Sequence[float], T: float, dt: float) -> ClassicalEqpReport:  # noqa: N803
    """Initial accelerations under NLO and GRAVITY (g = alpha) for transverse momenta ``p_list``.

    Each particle starts at rest in x at x = 0 with p = (0, q, 0). ``T`` is cut to
    measurement_window so that no trajectory reaches the horizon.
    """
    if len(p_list) < 2:
        raise ParameterError(f"Need at least 2 momenta to compare accelerations, got {len(p_list)}")

    window = measurement_window(params, p_list, T)
    if window < T:
        logger.debug(f"Classical window cut from T={T} to {window:.6g} to stay inside the Rindler wedge")
    step = min(dt, window / 2.0)

    rows: list[ClassicalEqpRow] = []
    trajectories: list[Trajectory] = []
    leading_gap = 0.0
    for q in p_list:
        state0 = PhaseState(x=0.0, p=(0.0, float(q), 0.0))
        nlo = integrate(state0, params, HamiltonianVariant.NLO, window, step)
        gravity = integrate(state0, params, HamiltonianVariant.GRAVITY, window, step)
        trajectories.extend((nlo, gravity))

        for sample in gravity.states:
            state = PhaseState(x=float(sample[0]), p=(sample[1], sample[2], sample[3]))
            gap = abs(
                hamiltonian(state, params, HamiltonianVariant.LEADING)
                - hamiltonian(state, params, HamiltonianVariant.GRAVITY)
            )
            leading_gap = max(leading_gap, gap)

        a_nlo = initial_acceleration(nlo)
        a_gravity = initial_acceleration(gravity)
        rows.append(
            ClassicalEqpRow(
                momentum=float(q),
                a_nlo=a_nlo,
                a_gravity=a_gravity,
                nlo_ratio=a_nlo / a_gravity,
                predicted_ratio=effective_acceleration(float(q), params) / params.alpha,
                nlo_drift=nlo.max_drift,
                gravity_drift=gravity.max_drift,
            )
        )

    nlo_values = [row.a_nlo for row in rows]
    gravity_values = [row.a_gravity for row in rows]
    report = ClassicalEqpReport(
        rows=tuple(rows),
        nlo_spread=max(nlo_values) - min(nlo_values),
        gravity_spread=max(gravity_values) - min(gravity_values),
        leading_gravity_max_difference=leading_gap,
        trajectories=tuple(trajectories),
    )
    logger.info(
        f"📈 Classical accelerations: NLO spread {report.nlo_spread:.3e}, gravity spread {report.gravity_spread:.3e}"
    )
    return report
