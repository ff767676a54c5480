"""Unit tests for Laguerre polynomials and Gauss-Laguerre quadrature."""

import math
from fractions import Fraction

import numpy as np
import pytest

from rindler.errors import ParameterError, QuadratureError
from rindler.specfun import (
    gauss_laguerre,
    integrate_semiinfinite,
    laguerre,
    laguerre_derivative,
    laguerre_second_derivative,
)

# n! L_n(x) coefficients, lowest power first
EXPLICIT_COEFFICIENTS = {
    0: (1,),
    1: (1, -1),
    2: (2, -4, 1),
    3: (6, -18, 9, -1),
    4: (24, -96, 72, -16, 1),
    5: (120, -600, 600, -200, 25, -1),
}


def explicit_laguerre(n, x):
    """Exact rational evaluation of the closed-form polynomial."""
    xr = Fraction(x)
    total = sum(Fraction(c) * xr**k for k, c in enumerate(EXPLICIT_COEFFICIENTS[n]))
    return float(total / math.factorial(n))


@pytest.mark.unit
class TestLaguerre:
    """Three-term recurrence against closed forms."""

    @pytest.mark.parametrize("x", [0.0, 0.3, 2.0, 17.5])
    def test_order_zero_is_one(self, x):
        assert laguerre(0, x) == 1.0

    def test_order_one(self):
        assert laguerre(1, 2.0) == -1.0

    def test_order_three_at_one(self):
        # (-1 + 9 - 18 + 6) / 6
        assert laguerre(3, 1.0) == pytest.approx(-2.0 / 3.0, abs=1e-15)

    @pytest.mark.parametrize("n", range(6))
    def test_matches_explicit_polynomials(self, n):
        for x in np.linspace(0.0, 20.0, 81):
            expected = explicit_laguerre(n, float(x))
            assert abs(laguerre(n, float(x)) - expected) <= 1e-12 * max(1.0, abs(expected))

    def test_array_input(self):
        xs = np.array([0.0, 1.0, 2.0])
        np.testing.assert_allclose(laguerre(2, xs), [1.0, -0.5, -1.0], atol=1e-15)

    def test_negative_order_rejected(self):
        with pytest.raises(ParameterError):
            laguerre(-1, 0.5)

    def test_non_finite_argument_rejected(self):
        with pytest.raises(ParameterError):
            laguerre(2, math.nan)

    @pytest.mark.parametrize("n", [0, 1, 4, 7])
    def test_derivatives_at_origin(self, n):
        assert laguerre_derivative(n, 0.0) == pytest.approx(-n)
        assert laguerre_second_derivative(n, 0.0) == pytest.approx(n * (n - 1) / 2)

    @pytest.mark.parametrize("n", [2, 3, 6])
    @pytest.mark.parametrize("x", [0.5, 3.0, 9.0])
    def test_laguerre_differential_equation(self, n, x):
        residual = (
            x * laguerre_second_derivative(n, x) + (1 - x) * laguerre_derivative(n, x) + n * laguerre(n, x)
        )
        assert residual == pytest.approx(0.0, abs=1e-9)


@pytest.mark.unit
class TestGaussLaguerre:
    """Rule construction and exactness."""

    def test_order_one(self):
        rule = gauss_laguerre(1)
        assert rule.nodes == pytest.approx((1.0,))
        assert rule.weights == pytest.approx((1.0,))

    def test_second_moment(self):
        assert integrate_semiinfinite(lambda x: x**2, gauss_laguerre(5)) == pytest.approx(2.0, abs=1e-12)

    def test_orthogonality_of_l3_l5(self):
        value = integrate_semiinfinite(lambda x: laguerre(3, x) * laguerre(5, x), gauss_laguerre(32))
        assert value == pytest.approx(0.0, abs=1e-10)

    @pytest.mark.parametrize("k", range(20))
    def test_exact_for_monomials_up_to_2n_minus_1(self, k):
        value = integrate_semiinfinite(lambda x: x**k, gauss_laguerre(10))
        assert value == pytest.approx(math.factorial(k), rel=1e-10)

    @pytest.mark.parametrize("n", [2, 10, 50, 100])
    def test_structure(self, n):
        rule = gauss_laguerre(n)
        assert rule.order == n == len(rule.nodes) == len(rule.weights)
        assert all(w > 0 for w in rule.weights)
        assert all(b > a for a, b in zip(rule.nodes, rule.nodes[1:]))
        assert math.fsum(rule.weights) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("n", [3, 8, 20])
    def test_nodes_are_roots(self, n):
        rule = gauss_laguerre(n)
        for node in rule.nodes:
            assert abs(laguerre(n, node)) <= 1e-9 * max(1.0, abs(laguerre_derivative(n, node)) * node)

    @pytest.mark.slow
    def test_largest_order(self):
        rule = gauss_laguerre(200)
        assert len(rule.nodes) == 200
        assert all(b > a for a, b in zip(rule.nodes, rule.nodes[1:]))
        assert all(w >= 0 for w in rule.weights)

    @pytest.mark.parametrize("n", [0, 201, -3])
    def test_out_of_range(self, n):
        with pytest.raises(ParameterError):
            gauss_laguerre(n)

    @pytest.mark.parametrize("n", [1, 7, 40])
    @pytest.mark.parametrize("g, expected", [(lambda x: 1.0, 1.0), (lambda x: x, 1.0)])
    def test_low_moments(self, n, g, expected):
        assert integrate_semiinfinite(g, gauss_laguerre(n)) == pytest.approx(expected, abs=1e-12)

    def test_damped_sine(self):
        assert integrate_semiinfinite(math.sin, gauss_laguerre(64)) == pytest.approx(0.5, abs=1e-8)

    def test_non_finite_integrand(self):
        with pytest.raises(QuadratureError, match="not finite"):
            integrate_semiinfinite(lambda x: math.inf, gauss_laguerre(4))

    def test_orthonormality_table(self):
        for n in range(11):
            for m in range(n, 11):
                rule = gauss_laguerre(max(2 * n, 2 * m) + 4)
                value = integrate_semiinfinite(lambda x, n=n, m=m: laguerre(n, x) * laguerre(m, x), rule)
                assert value == pytest.approx(1.0 if n == m else 0.0, abs=1e-9)

    def test_scipy_nodes_agree(self):
        special = pytest.importorskip("scipy.special")
        nodes, weights = special.roots_laguerre(24)
        rule = gauss_laguerre(24)
        np.testing.assert_allclose(rule.nodes, nodes, rtol=1e-12)
        np.testing.assert_allclose(rule.weights, weights, rtol=1e-9)
