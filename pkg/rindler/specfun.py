"""Special-function kernel: Laguerre polynomials, Airy Ai and its zeros, Gauss-Laguerre quadrature.

Everything here is plain double precision with no special-function library behind it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from rindler.errors import ConvergenceError, ParameterError, QuadratureError

logger = logging.getLogger(__name__)

ArrayLike = float | npt.NDArray[np.float64]

# Ai(0) and -Ai'(0)
AIRY_C1 = 0.355028053887817239
AIRY_C2 = 0.258819403792806798
# the truncated asymptotic series meets the Maclaurin branch to about 1e-7 relative here
AIRY_SWITCH = 5.0

MAX_GAUSS_LAGUERRE_ORDER = 200
_NEWTON_RTOL = 3.0e-14
_NEWTON_MAX_ITERATIONS = 100
_BISECTION_MAX_ITERATIONS = 200
_LOG_RESCALE = 1.0e100


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre rule: sum(w_i g(x_i)) approximates the integral of exp(-x) g(x) over (0, inf)."""

    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    order: int

    def __post_init__(self) -> None:
        if not (len(self.nodes) == len(self.weights) == self.order):
            raise ParameterError(
                f"Rule of order {self.order} has {len(self.nodes)} nodes and {len(self.weights)} weights"
            )


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ParameterError(f"Polynomial order must be an integer, got {n!r}")
    if n < 0:
        raise ParameterError(f"Polynomial order must be >= 0, got {n}")


def _as_output(values: npt.NDArray[np.float64], scalar: bool) -> ArrayLike:
    return float(values) if scalar else values


def _laguerre_family(n: int, x: ArrayLike) -> tuple[list[npt.NDArray[np.float64]], bool]:
    """L_0 .. L_n at x via (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}."""
    _check_order(n)
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("Laguerre argument must be finite")

    family = [np.ones_like(arr)]
    if n >= 1:
        family.append(1.0 - arr)
    for k in range(1, n):
        family.append(((2 * k + 1 - arr) * family[k] - k * family[k - 1]) / (k + 1))
    return family, arr.ndim == 0


def laguerre(n: int, x: ArrayLike) -> ArrayLike:
    """Laguerre polynomial L_n(x); accepts a scalar or an array."""
    family, scalar = _laguerre_family(n, x)
    return _as_output(family[n], scalar)


def laguerre_derivative(n: int, x: ArrayLike) -> ArrayLike:
    """L_n'(x) = -(L_0 + ... + L_{n-1}), which equals -n at x = 0."""
    family, scalar = _laguerre_family(n, x)
    total = np.zeros_like(family[0])
    for k in range(n):
        total = total - family[k]
    return _as_output(total, scalar)


def laguerre_second_derivative(n: int, x: ArrayLike) -> ArrayLike:
    """L_n''(x) = sum_{k<=n-2} (n-1-k) L_k(x), which equals n(n-1)/2 at x = 0."""
    family, scalar = _laguerre_family(n, x)
    total = np.zeros_like(family[0])
    for k in range(n - 1):
        total = total + (n - 1 - k) * family[k]
    return _as_output(total, scalar)


def _airy_series(x: float) -> float:
    cube = x**3
    f_term, g_term = 1.0, x
    f_sum, g_sum = f_term, g_term
    k = 0
    while True:
        f_term *= cube / ((3 * k + 2) * (3 * k + 3))
        g_term *= cube / ((3 * k + 3) * (3 * k + 4))
        f_sum += f_term
        g_sum += g_term
        k += 1
        if abs(f_term) <= 1e-17 * abs(f_sum) and abs(g_term) <= 1e-17 * max(abs(g_sum), 1e-300):
            break
        if k > 200:
            break
    return AIRY_C1 * f_sum - AIRY_C2 * g_sum


def _asymptotic_coefficients(zeta: float) -> list[float]:
    """u_k / zeta^k truncated before the smallest term."""
    terms = [1.0]
    u = 1.0
    k = 1
    while True:
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        term = u / zeta**k
        if term >= terms[-1]:
            break
        terms.append(term)
        k += 1
    return terms


def _airy_asymptotic_positive(x: float) -> float:
    zeta = 2.0 / 3.0 * x**1.5
    series = sum((-1) ** k * t for k, t in enumerate(_asymptotic_coefficients(zeta)))
    return math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * x**0.25) * series


def _airy_asymptotic_negative(x: float) -> float:
    z = -x
    zeta = 2.0 / 3.0 * z**1.5
    terms = _asymptotic_coefficients(zeta)
    even = sum((-1) ** (k // 2) * t for k, t in enumerate(terms) if k % 2 == 0)
    odd = sum((-1) ** (k // 2) * t for k, t in enumerate(terms) if k % 2 == 1)
    phase = zeta - math.pi / 4.0
    return (math.cos(phase) * even + math.sin(phase) * odd) / (math.sqrt(math.pi) * z**0.25)


def airy_ai(x: float) -> float:
    """Airy function Ai(x): Maclaurin series for |x| <= 5, asymptotic expansions beyond."""
    if not math.isfinite(x):
        raise ParameterError(f"Airy argument must be finite, got {x!r}")
    x = float(x)
    if abs(x) <= AIRY_SWITCH:
        return _airy_series(x)
    if x > 0.0:
        return _airy_asymptotic_positive(x)
    return _airy_asymptotic_negative(x)


def _airy_zero_estimate(k: int) -> float:
    t = 3.0 * math.pi * (4 * k - 1) / 8.0
    return -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / 48.0 * t**-2 - 5.0 / 36.0 * t**-4)


@lru_cache(maxsize=256)
def airy_zero(k: int) -> float:
    """k-th negative zero a_k of Ai, with a_1 closest to the origin."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise ParameterError(f"Airy zero index must be an integer >= 1, got {k!r}")

    guess = _airy_zero_estimate(int(k))
    half_width = 0.25 * math.pi / math.sqrt(abs(guess))
    lo, hi = guess - half_width, guess + half_width
    f_lo, f_hi = airy_ai(lo), airy_ai(hi)
    widenings = 0
    while f_lo * f_hi > 0.0:
        widenings += 1
        if widenings > 4:
            raise ConvergenceError(f"Could not bracket Airy zero {k} around {guess}")
        half_width *= 1.5
        lo, hi = guess - half_width, guess + half_width
        f_lo, f_hi = airy_ai(lo), airy_ai(hi)

    for _ in range(_BISECTION_MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        f_mid = airy_ai(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo <= 1e-13 * max(1.0, abs(mid)):
            return 0.5 * (lo + hi)
    raise ConvergenceError(f"Bisection for Airy zero {k} did not converge")


def _laguerre_pair_scaled(n: int, z: float) -> tuple[float, float, float]:
    """(L_n, L_{n-1}) at z, rescaled to stay in range, plus the log of the scale removed."""
    p1, p2 = 1.0, 0.0
    log_scale = 0.0
    for j in range(1, n + 1):
        p3, p2 = p2, p1
        p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j
        if abs(p1) > _LOG_RESCALE:
            p1 /= _LOG_RESCALE
            p2 /= _LOG_RESCALE
            log_scale += math.log(_LOG_RESCALE)
    return p1, p2, log_scale


@lru_cache(maxsize=64)
def gauss_laguerre(n: int) -> QuadratureRule:
    """Gauss-Laguerre rule of order n (1 <= n <= 200).

    Nodes come from Newton iteration on L_n; weights are 1 / (n |L_n'(x) L_{n-1}(x)|),
    evaluated in log space. Weights of the outermost nodes underflow to zero for n near 200.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ParameterError(f"Quadrature order must be an integer, got {n!r}")
    if not 1 <= n <= MAX_GAUSS_LAGUERRE_ORDER:
        raise ParameterError(f"Quadrature order must be in [1, {MAX_GAUSS_LAGUERRE_ORDER}], got {n}")
    n = int(n)

    nodes: list[float] = []
    weights: list[float] = []
    z = 0.0
    for i in range(1, n + 1):
        if i == 1:
            z = 3.0 / (1.0 + 2.4 * n)
        elif i == 2:
            z += 15.0 / (1.0 + 2.5 * n)
        else:
            ai = i - 2
            z = nodes[-1] + (1.0 + 2.55 * ai) / (1.9 * ai) * (nodes[-1] - nodes[-2])

        last_step = math.inf
        for iteration in range(_NEWTON_MAX_ITERATIONS):
            p1, p2, log_scale = _laguerre_pair_scaled(n, z)
            pp = n * (p1 - p2) / z
            step = p1 / pp
            z -= step
            if abs(step) <= _NEWTON_RTOL * abs(z):
                break
            # stagnation at rounding level
            if abs(step) >= last_step and abs(step) <= 1e-10 * abs(z):
                logger.debug(f"Gauss-Laguerre n={n} node {i}: stopped at rounding level after {iteration} steps")
                break
            last_step = abs(step)
        else:
            raise ConvergenceError(f"Newton iteration for Gauss-Laguerre node {i} of {n} did not converge")

        p1, p2, log_scale = _laguerre_pair_scaled(n, z)
        pp = n * (p1 - p2) / z
        if pp * p2 >= 0.0:
            raise ConvergenceError(f"Gauss-Laguerre node {i} of {n} landed off a root of L_{n}")
        log_weight = -math.log(n) - math.log(abs(pp)) - math.log(abs(p2)) - 2.0 * log_scale
        nodes.append(z)
        weights.append(math.exp(log_weight))

    if any(b <= a for a, b in zip(nodes, nodes[1:])):
        raise ConvergenceError(f"Gauss-Laguerre nodes for n={n} are not strictly increasing")

    logger.debug(f"Gauss-Laguerre rule n={n}: largest node {nodes[-1]:.6g}")
    return QuadratureRule(nodes=tuple(nodes), weights=tuple(weights), order=n)


def integrate_semiinfinite(g: Callable[[float], float], rule: QuadratureRule) -> float:
    """sum(w_i g(x_i)), i.e. the integral of exp(-x) g(x) over (0, inf).

    The caller passes g without the exp(-x) weight.
    """
    values = []
    for node in rule.nodes:
        value = float(g(node))
        if not math.isfinite(value):
            raise QuadratureError(f"Integrand is not finite at node x={node}: {value}")
        values.append(value)
    return math.fsum(w * v for w, v in zip(rule.weights, values))
