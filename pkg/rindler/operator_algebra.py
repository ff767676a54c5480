"""Matrix checks of the operator identities behind the quantized Hamiltonian.

x and p are represented on a truncated oscillator basis (unit mass and frequency).
Hard truncation spoils the last two rows and columns of every product, so every
identity is asserted on the interior block only: indices < N - 2, and for the
two-dimensional tensor basis both sub-indices < N - 2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from rindler.config_loader import ConfigLoader, get_config_loader
from rindler.errors import ConvergenceError, ParameterError

logger = logging.getLogger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]

MIN_BASIS_SIZE = 4
MAX_TENSOR_BASIS_SIZE = 32


@dataclass(frozen=True)
class MatrixRep:
    """Truncated x and p matrices for one degree of freedom."""

    N: int  # noqa: N815
    X: ComplexMatrix  # noqa: N815
    P: ComplexMatrix  # noqa: N815
    hbar: float

    @property
    def identity(self) -> ComplexMatrix:
        return np.eye(self.N, dtype=np.complex128)


@dataclass(frozen=True)
class BoppShift:
    """Noncommutative position operators on the N^2 tensor basis, with the untouched momenta."""

    X_nc: ComplexMatrix  # noqa: N815
    Y_nc: ComplexMatrix  # noqa: N815
    Px: ComplexMatrix  # noqa: N815
    Py: ComplexMatrix  # noqa: N815
    N: int  # noqa: N815
    theta: float


@dataclass(frozen=True)
class TrivialityResult:
    """NC vs commutative gravitational spectra on the interior block."""

    spectrum_nc: tuple[float, ...]
    spectrum_c: tuple[float, ...]
    constant_offset: float
    max_shift: float
    block_residual: float

    @property
    def residual(self) -> float:
        """Worst of the spectral mismatch and the block-structure residual."""
        return max(self.max_shift, self.block_residual)


@dataclass(frozen=True)
class CheckResult:
    """One row of the algebra verification table."""

    check: str
    N: int  # noqa: N815
    residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "check": self.check,
            "N": self.N,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _frozen(matrix: ComplexMatrix) -> ComplexMatrix:
    matrix.setflags(write=False)
    return matrix


def build_rep(N: int, hbar: float) -> MatrixRep:  # noqa: N803
    """X = sqrt(hbar/2)(a + a^dag), P = i sqrt(hbar/2)(a^dag - a) with a[n-1, n] = sqrt(n)."""
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < MIN_BASIS_SIZE:
        raise ParameterError(f"Basis size must be an integer >= {MIN_BASIS_SIZE}, got {N!r}")
    if not (math.isfinite(hbar) and hbar > 0.0):
        raise ParameterError(f"hbar must be > 0, got {hbar}")

    lowering = np.diag(np.sqrt(np.arange(1, N, dtype=np.float64)), k=1).astype(np.complex128)
    raising = lowering.conj().T
    scale = math.sqrt(hbar / 2.0)
    X = scale * (lowering + raising)  # noqa: N806
    P = 1j * scale * (raising - lowering)  # noqa: N806
    return MatrixRep(N=int(N), X=_frozen(X), P=_frozen(P), hbar=float(hbar))


def interior_indices(N: int, tensor: bool = False) -> npt.NDArray[np.intp]:  # noqa: N803
    """Row/column indices of the interior block."""
    keep = np.arange(N) < N - 2
    if tensor:
        keep = np.kron(keep, keep).astype(bool)
    return np.flatnonzero(keep)


def interior_block(matrix: ComplexMatrix, N: int, tensor: bool = False) -> ComplexMatrix:  # noqa: N803
    idx = interior_indices(N, tensor)
    return matrix[np.ix_(idx, idx)]


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return a @ b - b @ a


def interior_residual(
    matrix: ComplexMatrix, expected: ComplexMatrix, N: int, tensor: bool = False  # noqa: N803
) -> float:
    """Largest entry magnitude of (matrix - expected) on the interior block."""
    diff = interior_block(matrix, N, tensor) - interior_block(expected, N, tensor)
    return float(np.max(np.abs(diff))) if diff.size else 0.0


def weyl_xp2(rep: MatrixRep) -> ComplexMatrix:
    """(1/3)(X P^2 + P^2 X + P X P), Hermitian by construction.

    P^2 X = (X P^2)^dag, so the first pair is assembled from one product and its adjoint.
    """
    xpp = rep.X @ rep.P @ rep.P
    pxp = rep.P @ rep.X @ rep.P
    return (xpp + xpp.conj().T + 0.5 * (pxp + pxp.conj().T)) / 3.0


def weyl_residual(rep: MatrixRep) -> float:
    """Interior residual of Weyl(x p^2) - (P^2 X + i hbar P)."""
    simplified = rep.P @ rep.P @ rep.X + 1j * rep.hbar * rep.P
    return interior_residual(weyl_xp2(rep), simplified, rep.N)


def bopp_shift(rep_x: MatrixRep, rep_y: MatrixRep, theta: float) -> BoppShift:
    """X_nc = X (x) I - (theta/2hbar) I (x) P_y,  Y_nc = I (x) Y + (theta/2hbar) P_x (x) I."""
    if rep_x.N != rep_y.N:
        raise ParameterError(f"Basis sizes differ: {rep_x.N} vs {rep_y.N}")
    if rep_x.hbar != rep_y.hbar:
        raise ParameterError(f"hbar differs between representations: {rep_x.hbar} vs {rep_y.hbar}")
    if not (math.isfinite(theta) and theta >= 0.0):
        raise ParameterError(f"theta must be >= 0, got {theta}")

    ident = rep_x.identity
    shift = theta / (2.0 * rep_x.hbar)
    px = np.kron(rep_x.P, ident)
    py = np.kron(ident, rep_y.P)
    x_nc = np.kron(rep_x.X, ident) - shift * py
    y_nc = np.kron(ident, rep_y.X) + shift * px
    return BoppShift(
        X_nc=_frozen(x_nc),
        Y_nc=_frozen(y_nc),
        Px=_frozen(px),
        Py=_frozen(py),
        N=rep_x.N,
        theta=float(theta),
    )


def bopp_residuals(shifted: BoppShift, hbar: float) -> dict[str, float]:
    """Interior residuals of the NC Heisenberg algebra for a Bopp-shifted pair."""
    n = shifted.N
    ident = np.eye(n * n, dtype=np.complex128)
    zero = np.zeros_like(ident)
    cross = max(
        interior_residual(commutator(shifted.X_nc, shifted.Py), zero, n, tensor=True),
        interior_residual(commutator(shifted.Y_nc, shifted.Px), zero, n, tensor=True),
        interior_residual(commutator(shifted.Px, shifted.Py), zero, n, tensor=True),
    )
    return {
        "bopp_xy": interior_residual(
            commutator(shifted.X_nc, shifted.Y_nc), 1j * shifted.theta * ident, n, tensor=True
        ),
        "bopp_x_px": interior_residual(commutator(shifted.X_nc, shifted.Px), 1j * hbar * ident, n, tensor=True),
        "bopp_y_py": interior_residual(commutator(shifted.Y_nc, shifted.Py), 1j * hbar * ident, n, tensor=True),
        "bopp_cross": cross,
    }


def nc_gravity_triviality(
    rep_x: MatrixRep, rep_y: MatrixRep, m: float, g: float, theta: float
) -> TrivialityResult:
    """Compare H = P^2/2m + m g X_nc with its commutative twin at q_y = p_y - theta m^2 g / 2hbar.

    Both tensor Hamiltonians are rotated into the P_y eigenbasis, restricted to interior x
    indices and diagonalized. The spectra must agree after removing theta^2 m^3 g^2 / 8hbar^2.
    ``block_residual`` measures how far the rotated NC Hamiltonian is from the block form
    Hx + (p_j^2/2m - (theta m g / 2hbar) p_j) with Hx = P_x^2/2m + m g X.
    """
    if rep_x.N > MAX_TENSOR_BASIS_SIZE:
        raise ParameterError(f"Tensor basis size must be <= {MAX_TENSOR_BASIS_SIZE}, got {rep_x.N}")
    if not (m > 0.0 and g > 0.0):
        raise ParameterError(f"m and g must be > 0, got m={m}, g={g}")

    shifted = bopp_shift(rep_x, rep_y, theta)
    hbar = rep_x.hbar
    n = rep_x.N
    coupling = theta * m * g / (2.0 * hbar)
    momentum_shift = theta * m**2 * g / (2.0 * hbar)
    constant_offset = theta**2 * m**3 * g**2 / (8.0 * hbar**2)

    h_nc = shifted.Px @ shifted.Px / (2.0 * m) + shifted.Py @ shifted.Py / (2.0 * m) + m * g * shifted.X_nc
    q_y = shifted.Py - momentum_shift * np.eye(n * n, dtype=np.complex128)
    h_c = shifted.Px @ shifted.Px / (2.0 * m) + q_y @ q_y / (2.0 * m) + m * g * np.kron(rep_x.X, rep_y.identity)

    # x index interior, every P_y eigen-index kept
    keep = np.flatnonzero(np.kron(np.arange(n) < n - 2, np.ones(n, dtype=bool)))
    try:
        p_values, p_vectors = np.linalg.eigh(rep_y.P)
        rotation = np.kron(rep_x.identity, p_vectors)
        rotated_nc = rotation.conj().T @ h_nc @ rotation
        rotated_c = rotation.conj().T @ h_c @ rotation
        spectrum_nc = np.linalg.eigvalsh(rotated_nc[np.ix_(keep, keep)])
        spectrum_c = np.linalg.eigvalsh(rotated_c[np.ix_(keep, keep)])
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"Eigen-decomposition failed in gravity triviality check: {e}") from e

    max_shift = float(np.max(np.abs(spectrum_nc - (spectrum_c - constant_offset))))

    h_x_full = rep_x.P @ rep_x.P / (2.0 * m) + m * g * rep_x.X
    expected = np.kron(h_x_full, rep_y.identity) + np.kron(
        rep_x.identity, np.diag(p_values**2 / (2.0 * m) - coupling * p_values)
    )
    block_residual = float(np.max(np.abs(rotated_nc - expected)))

    logger.debug(
        f"Gravity triviality N={n} theta={theta}: max_shift={max_shift:.3e}, block_residual={block_residual:.3e}"
    )
    return TrivialityResult(
        spectrum_nc=tuple(spectrum_nc.tolist()),
        spectrum_c=tuple(spectrum_c.tolist()),
        constant_offset=constant_offset,
        max_shift=max_shift,
        block_residual=block_residual,
    )


@dataclass
class AlgebraVerifier:
    """Runs every operator-algebra check and tabulates residuals against tolerances."""

    tolerance: float | None = None
    config_loader: ConfigLoader = field(default_factory=get_config_loader)

    def __post_init__(self) -> None:
        if self.tolerance is None:
            self.tolerance = self.config_loader.get_tolerance("algebra_residual", 1e-9)
        self.triviality_tolerance = self.config_loader.get_tolerance("gravity_triviality", 1e-6)
        self.sizes = [int(n) for n in self.config_loader.get_numeric_setting("algebra_sizes", [8, 16, 32])]
        self.triviality_size = int(self.config_loader.get_numeric_setting("triviality_size", 16))
        self.triviality_theta = float(self.config_loader.get_numeric_setting("triviality_theta", 0.05))

    def _row(self, check: str, n: int, residual: float, tolerance: float) -> CheckResult:
        passed = residual <= tolerance
        if not passed:
            logger.warning(f"❌ {check} N={n}: residual {residual:.3e} exceeds {tolerance:.1e}")
        return CheckResult(check=check, N=n, residual=residual, tolerance=tolerance, passed=passed)

    def run(self, hbar: float = 1.0, theta: float = 0.0, m: float = 1.0, g: float = 1.0) -> list[CheckResult]:
        """Weyl identity, canonical commutator and Bopp relations per basis size, then gravity triviality.

        The triviality row runs at ``theta`` when it is positive, otherwise at the configured default.
        """
        tolerance = float(self.tolerance)  # type: ignore[arg-type]
        rows: list[CheckResult] = []
        for n in self.sizes:
            rep = build_rep(n, hbar)
            rows.append(self._row("weyl_identity", n, weyl_residual(rep), tolerance))
            canonical = interior_residual(commutator(rep.X, rep.P), 1j * hbar * rep.identity, n)
            rows.append(self._row("canonical_commutator", n, canonical, tolerance))

            shifted = bopp_shift(rep, rep, theta)
            for check, residual in bopp_residuals(shifted, hbar).items():
                rows.append(self._row(check, n, residual, tolerance))

        triviality_theta = theta if theta > 0.0 else self.triviality_theta
        rep = build_rep(self.triviality_size, hbar)
        result = nc_gravity_triviality(rep, rep, m, g, triviality_theta)
        rows.append(self._row("gravity_triviality", self.triviality_size, result.residual, self.triviality_tolerance))

        passed = sum(row.passed for row in rows)
        logger.info(f"📊 Operator algebra: {passed}/{len(rows)} checks passed")
        return rows
