"""Unit tests for the noncommutative ground-state shift."""

import math

import numpy as np
import pytest

from rindler.errors import ParameterError
from rindler.nc_shift import (
    NC_COLUMNS,
    derivative_part_closed_form,
    ground_state_curvature,
    shift_analytic,
    shift_numeric,
    shift_report,
)
from rindler.specfun import gauss_laguerre
from rindler.units_params import PhysicalParams, natural_units
from tests.fixtures.physics.parameter_specs import NC_SHIFT_SPECS


def random_params(rng):
    return PhysicalParams(
        m=float(rng.uniform(0.5, 2.0)),
        alpha=float(rng.uniform(0.1, 3.0)),
        c=float(rng.uniform(0.5, 3.0)),
        hbar=float(rng.uniform(0.5, 2.0)),
        p_y=float(rng.uniform(-2.0, 2.0)),
        p_z=float(rng.uniform(-1.0, 1.0)),
        theta=float(rng.uniform(1e-4, 0.1)),
    )


@pytest.mark.unit
class TestShiftAnalytic:
    """(alpha theta m / 2 hbar)(1 + p_y^2 / 2 m^2 c^2) p_y."""

    @pytest.mark.parametrize("spec", NC_SHIFT_SPECS.values(), ids=NC_SHIFT_SPECS.keys())
    def test_reference_values(self, spec):
        assert shift_analytic(spec.params()) == pytest.approx(spec.expected["analytic"], abs=1e-15)

    def test_linear_in_theta(self):
        single = shift_analytic(natural_units(theta=0.01, p_y=0.3))
        double = shift_analytic(natural_units(theta=0.02, p_y=0.3))
        assert double == pytest.approx(2.0 * single, rel=1e-14)

    @pytest.mark.parametrize("p_y", [0.1, 0.7, 2.5])
    def test_odd_in_transverse_momentum(self, p_y):
        plus = shift_analytic(natural_units(theta=0.05, p_y=p_y))
        minus = shift_analytic(natural_units(theta=0.05, p_y=-p_y))
        assert minus == -plus


@pytest.mark.unit
class TestShiftNumeric:
    """Quadrature of each perturbation term in the ground state."""

    def test_curvature_is_a_quarter(self, laguerre_rule_32):
        assert ground_state_curvature(laguerre_rule_32) == pytest.approx(0.25, abs=1e-14)

    def test_reference_parts(self, laguerre_rule_32):
        result = shift_numeric(natural_units(theta=0.01, p_y=0.2), laguerre_rule_32)
        assert result.constant_part == pytest.approx(0.00102, rel=1e-10)
        assert result.derivative_part == pytest.approx(-0.00204, rel=1e-10)
        assert result.total_numeric == pytest.approx(-0.00102, rel=1e-9)

    def test_constant_part_matches_closed_form_over_random_draws(self, laguerre_rule_32):
        rng = np.random.default_rng(20240611)
        for _ in range(100):
            params = random_params(rng)
            result = shift_numeric(params, laguerre_rule_32)
            assert result.constant_part == pytest.approx(shift_analytic(params), rel=1e-10)
            assert result.analytic == shift_analytic(params)

    def test_derivative_part_matches_closed_form(self, laguerre_rule_32):
        rng = np.random.default_rng(7)
        for _ in range(20):
            params = random_params(rng)
            numeric = shift_numeric(params, laguerre_rule_32).derivative_part
            assert numeric == pytest.approx(derivative_part_closed_form(params), rel=1e-8)

    def test_commutative_limit(self, laguerre_rule_32):
        result = shift_numeric(natural_units(theta=0.0, p_y=0.4), laguerre_rule_32)
        assert result.constant_part == 0.0
        assert result.derivative_part == 0.0
        assert result.analytic == 0.0

    def test_rule_order_floor(self):
        with pytest.raises(ParameterError, match=">= 16"):
            shift_numeric(natural_units(theta=0.01, p_y=0.2), gauss_laguerre(8))


@pytest.mark.unit
class TestShiftReport:
    def test_reference_report(self):
        report = shift_report(NC_SHIFT_SPECS["reference"].params())
        assert report.analytic == pytest.approx(0.00102, rel=1e-12)
        assert report.ratio_to_spacing == pytest.approx(0.00102 / math.sqrt(2.0), rel=1e-12)
        assert report.ratio_to_spacing == pytest.approx(7.21e-4, abs=1e-6)
        assert report.derivative_to_constant_ratio == pytest.approx(-2.0, rel=1e-10)
        assert report.discrepancy_flag is True

    def test_zero_momentum_suppresses_ratio(self):
        report = shift_report(NC_SHIFT_SPECS["no_transverse_motion"].params())
        assert report.analytic == 0.0
        assert report.derivative_to_constant_ratio is None
        assert report.discrepancy_flag is False

    def test_derivative_to_constant_ratio_closed_form(self, laguerre_rule_32):
        rng = np.random.default_rng(99)
        for _ in range(10):
            params = random_params(rng)
            report = shift_report(params, laguerre_rule_32)
            m, c = params.m, params.c
            e_tilde = m * c**2 + (params.p_y**2 + params.p_z**2) / (2.0 * m)
            expected = -2.0 * e_tilde / (c**2 * (1.0 + params.p_y**2 / (2.0 * m**2 * c**2)))
            assert report.derivative_to_constant_ratio == pytest.approx(expected, rel=1e-9)
            assert report.discrepancy_flag is (abs(report.derivative_part) >= abs(report.constant_part))

    def test_ratio_depends_on_mass_and_transverse_momentum(self, laguerre_rule_32):
        heavy = shift_report(PhysicalParams(m=2.0, alpha=1.0, c=1.0, hbar=1.0, p_y=0.2, theta=0.01), laguerre_rule_32)
        # E_tilde / c^2 = 2.01, 1 + p_y^2 / 8 = 1.005
        assert heavy.derivative_to_constant_ratio == pytest.approx(-4.0, rel=1e-9)
        moving = shift_report(natural_units(theta=0.01, p_y=0.2, p_z=1.0), laguerre_rule_32)
        assert moving.derivative_to_constant_ratio == pytest.approx(-2.0 * 1.52 / 1.02, rel=1e-9)
        assert heavy.discrepancy_flag is True
        assert moving.discrepancy_flag is True

    def test_columns(self):
        report = shift_report(NC_SHIFT_SPECS["reference"].params())
        assert list(report.to_dict()) == list(NC_COLUMNS)
