"""Finite-difference check of the analytic spectrum.

The radial equation in zeta is the Sturm-Liouville problem

    -(zeta phi')' + (zeta / 4) phi = sigma phi      on (0, zeta_max),

discretized on cell centres zeta_i = (i + 1/2) h with face fluxes, so the matrix is
symmetric tridiagonal. The flux coefficient vanishes at zeta = 0, which selects the
regular (Laguerre) branch without a ghost value; phi(zeta_max) = 0 closes the right end.
Eigenvalues come from Sturm-sequence bisection, eigenvectors from inverse iteration.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from rindler.config_loader import get_config_loader
from rindler.errors import ConvergenceError, ParameterError
from rindler.rindler_spectrum import eigenfunction
from rindler.units_params import PhysicalParams, derive_constants

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

MIN_GRID_POINTS = 50
CONVERGENCE_COLUMNS = ("h", "zeta_max", "n", "sigma_numeric", "sigma_analytic", "abs_error", "truncated")

_EPS = float(np.finfo(np.float64).eps)
_TINY = float(np.finfo(np.float64).tiny)


@dataclass(frozen=True)
class Grid:
    """Cell-centred grid on (0, zeta_max)."""

    zeta_max: float
    n_points: int

    def __post_init__(self) -> None:
        if isinstance(self.n_points, bool) or not isinstance(self.n_points, (int, np.integer)):
            raise ParameterError(f"n_points must be an integer, got {self.n_points!r}")
        if self.n_points < MIN_GRID_POINTS:
            raise ParameterError(f"n_points must be >= {MIN_GRID_POINTS}, got {self.n_points}")
        if not (math.isfinite(self.zeta_max) and self.zeta_max > 0.0):
            raise ParameterError(f"zeta_max must be finite and > 0, got {self.zeta_max}")

    @property
    def h(self) -> float:
        return self.zeta_max / self.n_points

    @property
    def nodes(self) -> FloatArray:
        return (np.arange(self.n_points, dtype=np.float64) + 0.5) * self.h


@dataclass(frozen=True)
class TridiagonalSystem:
    """Symmetric tridiagonal matrix: ``diag`` (length N) and ``offdiag`` (length N - 1)."""

    diag: FloatArray
    offdiag: FloatArray
    grid: Grid | None = None

    def __post_init__(self) -> None:
        diag = np.array(self.diag, dtype=np.float64)
        offdiag = np.array(self.offdiag, dtype=np.float64)
        if diag.ndim != 1 or diag.size == 0:
            raise ParameterError("diag must be a non-empty vector")
        if offdiag.shape != (diag.size - 1,):
            raise ParameterError(f"offdiag must have length {diag.size - 1}, got {offdiag.size}")
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
            raise ParameterError("Tridiagonal entries must be finite")
        diag.setflags(write=False)
        offdiag.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return int(self.diag.size)


@dataclass(frozen=True)
class EigenResult:
    values: tuple[float, ...]
    vectors: tuple[FloatArray, ...] | None = None


@dataclass(frozen=True)
class NumericLevel:
    n: int
    sigma_numeric: float
    energy_numeric: float


@dataclass(frozen=True)
class ConvergenceRow:
    h: float
    zeta_max: float
    n: int
    sigma_numeric: float
    sigma_analytic: float
    abs_error: float
    truncated: bool

    def to_dict(self) -> dict[str, float | int | bool]:
        return {column: getattr(self, column) for column in CONVERGENCE_COLUMNS}


@dataclass(frozen=True)
class ConvergenceStudy:
    """Error table per grid plus the observed order log2(e(h) / e(h/2)) per refinement."""

    rows: tuple[ConvergenceRow, ...]
    max_errors: tuple[tuple[float, float], ...]
    orders: tuple[float, ...]
    truncation_limited: bool = field(default=False)


def make_grid(zeta_max: float, n_points: int) -> Grid:
    return Grid(zeta_max=float(zeta_max), n_points=int(n_points))


def discretize_sl(grid: Grid) -> TridiagonalSystem:
    """Flux-form matrix: diag (zeta_{i-1/2} + zeta_{i+1/2})/h^2 + zeta_i/4, offdiag -zeta_{i+1/2}/h^2."""
    h = grid.h
    faces = np.arange(grid.n_points + 1, dtype=np.float64) * h
    diag = (faces[:-1] + faces[1:]) / h**2 + grid.nodes / 4.0
    offdiag = -faces[1:-1] / h**2
    return TridiagonalSystem(diag=diag, offdiag=offdiag, grid=grid)


def tridiagonal_matvec(system: TridiagonalSystem, v: FloatArray) -> FloatArray:
    v = np.asarray(v, dtype=np.float64)
    out = system.diag * v
    out[:-1] += system.offdiag * v[1:]
    out[1:] += system.offdiag * v[:-1]
    return out


def gershgorin_bounds(system: TridiagonalSystem) -> tuple[float, float]:
    """Interval containing every eigenvalue."""
    radius = np.zeros_like(system.diag)
    off = np.abs(system.offdiag)
    radius[:-1] += off
    radius[1:] += off
    return float(np.min(system.diag - radius)), float(np.max(system.diag + radius))


def sturm_count(system: TridiagonalSystem, value: float) -> int:
    """Number of eigenvalues below ``value`` (negative pivots of the LDL^T of T - value I)."""
    diag = system.diag.tolist()
    off_sq = (system.offdiag**2).tolist()
    pivmin = _TINY * max(1.0, max(off_sq, default=1.0))
    count = 0
    q = diag[0] - value
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, len(diag)):
        q = diag[i] - value - off_sq[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _solve_shifted(system: TridiagonalSystem, shift: float, rhs: list[float]) -> list[float]:
    """Solve (T - shift I) x = rhs by Gaussian elimination with partial pivoting."""
    diag = (system.diag - shift).tolist()
    off = system.offdiag.tolist()
    n = len(diag)
    pivmin = _TINY / _EPS

    upper: list[tuple[float, float, float]] = []
    y: list[float] = []
    cur0, cur1, cur2 = diag[0], (off[0] if n > 1 else 0.0), 0.0
    cur_rhs = rhs[0]
    for i in range(n - 1):
        sub, mid = off[i], diag[i + 1]
        sup = off[i + 1] if i + 1 < n - 1 else 0.0
        nxt_rhs = rhs[i + 1]
        if abs(cur0) >= abs(sub):
            pivot = cur0 if abs(cur0) >= pivmin else math.copysign(pivmin, cur0)
            factor = sub / pivot
            upper.append((pivot, cur1, cur2))
            y.append(cur_rhs)
            cur0, cur1, cur2 = mid - factor * cur1, sup - factor * cur2, 0.0
            cur_rhs = nxt_rhs - factor * cur_rhs
        else:
            factor = cur0 / sub
            upper.append((sub, mid, sup))
            y.append(nxt_rhs)
            cur0, cur1, cur2 = cur1 - factor * mid, cur2 - factor * sup, 0.0
            cur_rhs = cur_rhs - factor * nxt_rhs
    upper.append((cur0 if abs(cur0) >= pivmin else math.copysign(pivmin, cur0), 0.0, 0.0))
    y.append(cur_rhs)

    x = [0.0] * n
    for i in range(n - 1, -1, -1):
        u0, u1, u2 = upper[i]
        total = y[i]
        if i + 1 < n:
            total -= u1 * x[i + 1]
        if i + 2 < n:
            total -= u2 * x[i + 2]
        x[i] = total / u0
    return x


def _inverse_iteration(system: TridiagonalSystem, value: float, steps: int) -> FloatArray:
    n = system.size
    # deterministic, non-symmetric start so no eigenvector is orthogonal to it
    vector = [1.0 + 0.5 * math.sin(1.7 * i) for i in range(n)]
    for _ in range(steps):
        vector = _solve_shifted(system, value, vector)
        # shift on an exact eigenvalue leaves entries near 1/pivmin
        peak = max(abs(v) for v in vector)
        if not math.isfinite(peak) or peak == 0.0:
            raise ConvergenceError(f"Inverse iteration broke down at eigenvalue {value}")
        vector = [v / peak for v in vector]
        norm = math.sqrt(math.fsum(v * v for v in vector))
        vector = [v / norm for v in vector]
    result = np.asarray(vector, dtype=np.float64)
    lead = int(np.argmax(np.abs(result) > 1e-3 * np.max(np.abs(result))))
    if result[lead] < 0.0:
        result = -result
    return result


def eig_tridiagonal(
    system: TridiagonalSystem,
    k: int,
    vectors: bool = False,
    tol: float | None = None,
    max_iterations: int | None = None,
) -> EigenResult:
    """Smallest k eigenvalues in ascending order by Sturm-sequence bisection.

    Each eigenvalue is bracketed to max(tol, 4 eps |lambda|). With ``vectors`` set,
    unit eigenvectors come from inverse iteration, signed so the first significant
    entry is positive.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= system.size:
        raise ParameterError(f"k must be an integer in [1, {system.size}], got {k!r}")

    loader = get_config_loader()
    tol = loader.get_tolerance("eigen_bisection", 1e-12) if tol is None else tol
    if max_iterations is None:
        max_iterations = int(loader.get_numeric_setting("max_bisection_iterations", 200))

    lower, upper = gershgorin_bounds(system)
    hi = min(lower + max(1.0, abs(lower)), upper)
    while sturm_count(system, hi) < k and hi < upper:
        hi = min(lower + 2.0 * (hi - lower), upper)

    values: list[float] = []
    for index in range(int(k)):
        lo_j, hi_j = lower, hi
        for _ in range(max_iterations):
            if hi_j - lo_j <= max(tol, 4.0 * _EPS * max(abs(lo_j), abs(hi_j))):
                break
            mid = 0.5 * (lo_j + hi_j)
            if sturm_count(system, mid) > index:
                hi_j = mid
            else:
                lo_j = mid
        else:
            raise ConvergenceError(
                f"Bisection for eigenvalue {index} did not reach {tol:g} within {max_iterations} iterations"
            )
        values.append(0.5 * (lo_j + hi_j))

    logger.debug(f"Sturm bisection: N={system.size}, lowest {k} eigenvalues {values}")

    eigenvectors = None
    if vectors:
        steps = int(loader.get_numeric_setting("inverse_iteration_steps", 3))
        eigenvectors = tuple(_inverse_iteration(system, value, steps) for value in values)
    return EigenResult(values=tuple(values), vectors=eigenvectors)


def sign_changes(vector: FloatArray, floor: float | None = None) -> int:
    """Sign changes among entries above floor * max|v|; smaller entries are treated as zero."""
    if floor is None:
        floor = get_config_loader().get_tolerance("sign_change_floor", 1e-8)
    v = np.asarray(vector, dtype=np.float64)
    significant = v[np.abs(v) > floor * np.max(np.abs(v))]
    return int(np.count_nonzero(np.signbit(significant[1:]) != np.signbit(significant[:-1])))


def energy_from_sigma(params: PhysicalParams, sigma: float) -> float:
    """E = sigma sqrt(gamma) hbar^2 alpha^2 / (2 m c^4), the inverse of sigma = kappa / sqrt(gamma)."""
    gamma = derive_constants(params, 0.0).gamma
    return sigma * math.sqrt(gamma) * params.hbar**2 * params.alpha**2 / (2.0 * params.m * params.c**4)


def solve_spectrum(params: PhysicalParams, grid: Grid, k: int) -> list[NumericLevel]:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    result = eig_tridiagonal(discretize_sl(grid), k)
    levels = [
        NumericLevel(n=n, sigma_numeric=sigma, energy_numeric=energy_from_sigma(params, sigma))
        for n, sigma in enumerate(result.values)
    ]
    logger.info(f"Numeric spectrum on {grid.n_points} points (zeta_max={grid.zeta_max}): {len(levels)} levels")
    return levels


def truncation_limited(zeta_max: float, n: int, decay_tolerance: float | None = None) -> bool:
    """True when the analytic eigenfunction has not decayed below tolerance at zeta_max."""
    if decay_tolerance is None:
        decay_tolerance = get_config_loader().get_tolerance("decay", 1e-6)
    return bool(abs(float(eigenfunction(n)(zeta_max))) > decay_tolerance)


def convergence_study(params: PhysicalParams, k: int, grids: Sequence[Grid]) -> ConvergenceStudy:
    """Error in sigma_n = n + 1/2 on a sequence of grids whose spacing halves each time."""
    if len(grids) < 3:
        raise ParameterError(f"Convergence study needs at least 3 grids, got {len(grids)}")
    for coarse, fine in zip(grids, grids[1:]):
        if not math.isclose(coarse.h, 2.0 * fine.h, rel_tol=1e-9):
            raise ParameterError(f"Grid spacing must halve between refinements: {coarse.h} -> {fine.h}")

    rows: list[ConvergenceRow] = []
    max_errors: list[tuple[float, float]] = []
    for grid in grids:
        levels = solve_spectrum(params, grid, k)
        worst = 0.0
        for level in levels:
            analytic = level.n + 0.5
            error = abs(level.sigma_numeric - analytic)
            worst = max(worst, error)
            rows.append(
                ConvergenceRow(
                    h=grid.h,
                    zeta_max=grid.zeta_max,
                    n=level.n,
                    sigma_numeric=level.sigma_numeric,
                    sigma_analytic=analytic,
                    abs_error=error,
                    truncated=truncation_limited(grid.zeta_max, level.n),
                )
            )
        max_errors.append((grid.h, worst))

    orders = tuple(
        math.log2(coarse / fine) if fine > 0.0 else math.inf
        for (_, coarse), (_, fine) in zip(max_errors, max_errors[1:])
    )
    limited = any(row.truncated for row in rows)
    if limited:
        logger.warning("⚠️ Convergence study is limited by domain truncation; increase zeta_max")
    logger.info(f"📈 Observed convergence orders: {', '.join(f'{order:.3f}' for order in orders)}")
    return ConvergenceStudy(rows=tuple(rows), max_errors=tuple(max_errors), orders=orders, truncation_limited=limited)
