"""Unit tests for the bouncer spectrum and the quantum equivalence comparison."""

import math

import pytest

from rindler.errors import ParameterError
from rindler.gravity_spectrum import (
    EQP_COLUMNS,
    bouncer_energy,
    bouncer_prefactor,
    bouncer_spectrum,
    eqp_deviation_report,
)
from rindler.specfun import airy_zero


@pytest.mark.unit
class TestBouncer:
    """E_n = (m g^2 hbar^2 / 2)^(1/3) |a_n|."""

    @pytest.mark.parametrize("n, expected", [(1, 1.8557571), (2, 3.2446076)])
    def test_reference_levels(self, n, expected):
        assert bouncer_energy(1.0, 1.0, 1.0, n) == pytest.approx(expected, abs=1e-6)

    @pytest.mark.parametrize("n", [1, 3, 7])
    def test_field_scaling(self, n):
        ratio = bouncer_energy(1.0, 4.0, 1.0, n) / bouncer_energy(1.0, 1.0, 1.0, n)
        assert ratio == pytest.approx(4.0 ** (2.0 / 3.0), rel=1e-12)

    def test_prefactor(self):
        assert bouncer_prefactor(2.0, 3.0, 0.5) == pytest.approx((2.0 * 9.0 * 0.25 / 2.0) ** (1.0 / 3.0))

    def test_spectrum_carries_airy_zeros(self):
        levels = bouncer_spectrum(1.0, 1.0, 1.0, 4)
        assert [level.n for level in levels] == [1, 2, 3, 4]
        assert levels[2].airy_zero == airy_zero(3)
        assert all(b.energy > a.energy for a, b in zip(levels, levels[1:]))

    def test_gap_times_root_of_zero_approaches_constant(self):
        # a_{n+1} - a_n ~ pi / sqrt|a_n| (1 - 1/6n), so the scaled gap climbs toward pi times the prefactor
        levels = bouncer_spectrum(1.0, 1.0, 1.0, 21)
        limit = math.pi * bouncer_prefactor(1.0, 1.0, 1.0)
        scaled = [
            (levels[n].energy - levels[n - 1].energy) * math.sqrt(abs(levels[n - 1].airy_zero)) / limit
            for n in range(10, 21)
        ]
        assert all(0.98 < value < 1.0 for value in scaled)
        assert all(b > a for a, b in zip(scaled, scaled[1:]))
        assert abs(scaled[-1] - 1.0) < 0.01

    @pytest.mark.parametrize("n", [0, -2, 1.0])
    def test_rejects_bad_level(self, n):
        with pytest.raises(ParameterError):
            bouncer_energy(1.0, 1.0, 1.0, n)

    @pytest.mark.parametrize("m, g, hbar", [(0.0, 1.0, 1.0), (1.0, -1.0, 1.0), (1.0, 1.0, math.inf)])
    def test_rejects_bad_constants(self, m, g, hbar):
        with pytest.raises(ParameterError):
            bouncer_energy(m, g, hbar, 1)


@pytest.mark.unit
class TestEqpDeviationReport:
    """Equal spacings in the accelerated frame against shrinking Airy gaps."""

    def test_natural_units_five_levels(self, natural_params):
        report = eqp_deviation_report(natural_params, 5)
        assert report.rindler.spacings == (math.sqrt(2.0),) * 5
        assert report.rindler.spacing_stddev == 0.0
        assert report.rindler.max_relative_variation == 0.0
        assert not report.rindler.strictly_decreasing
        assert report.bouncer.strictly_decreasing
        assert report.bouncer.spacing_stddev > 0.0
        assert not report.profiles_coincide

    def test_bouncer_spacings_shrink_up_to_level_ten(self, natural_params):
        report = eqp_deviation_report(natural_params, 10)
        assert report.bouncer.strictly_decreasing
        assert len(report.bouncer.spacings) == 10

    def test_bouncer_spacings_shrink_up_to_level_twenty(self, natural_params):
        report = eqp_deviation_report(natural_params, 20)
        assert report.bouncer.strictly_decreasing
        assert len(report.bouncer.spacings) == 20
        assert all(b < a for a, b in zip(report.bouncer.spacings, report.bouncer.spacings[1:]))

    def test_levels_start_at_one(self, natural_params):
        report = eqp_deviation_report(natural_params, 3)
        assert report.rindler.levels == (1, 2, 3)
        assert report.rindler.energies[0] == pytest.approx(1.5 * math.sqrt(2.0))
        assert report.bouncer.energies[0] == pytest.approx(1.8557571, abs=1e-6)

    def test_rows_and_summary(self, natural_params):
        report = eqp_deviation_report(natural_params, 4)
        rows = report.rows()
        assert len(rows) == 8
        assert all(list(row) == list(EQP_COLUMNS) for row in rows)
        assert [row["system"] for row in rows] == ["rindler"] * 4 + ["bouncer"] * 4
        summary = report.summary()
        assert set(summary) == {"rindler", "bouncer"}
        assert summary["bouncer"]["strictly_decreasing"] is True

    def test_field_follows_acceleration(self, slow_frame_params):
        report = eqp_deviation_report(slow_frame_params, 3)
        assert report.bouncer.energies[0] == pytest.approx(bouncer_energy(1.0, 0.1, 1.0, 1))

    @pytest.mark.parametrize("k", [0, 2])
    def test_needs_three_levels(self, natural_params, k):
        with pytest.raises(ParameterError, match="at least 3"):
            eqp_deviation_report(natural_params, k)
