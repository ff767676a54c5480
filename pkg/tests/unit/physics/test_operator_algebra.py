"""Unit tests for the truncated-basis operator identities."""

import dataclasses

import numpy as np
import pytest

from rindler import operator_algebra
from rindler.errors import ParameterError
from rindler.operator_algebra import (
    AlgebraVerifier,
    bopp_residuals,
    bopp_shift,
    build_rep,
    commutator,
    interior_indices,
    interior_residual,
    nc_gravity_triviality,
    weyl_residual,
    weyl_xp2,
)


@pytest.mark.unit
class TestMatrixRep:
    """Oscillator-basis x and p."""

    def test_hermitian(self):
        rep = build_rep(10, 1.0)
        np.testing.assert_allclose(rep.X, rep.X.conj().T)
        np.testing.assert_allclose(rep.P, rep.P.conj().T)

    def test_read_only(self):
        rep = build_rep(6, 1.0)
        with pytest.raises(ValueError):
            rep.X[0, 0] = 1.0

    @pytest.mark.parametrize("hbar", [1.0, 0.3])
    def test_canonical_commutator_on_interior(self, hbar):
        rep = build_rep(12, hbar)
        residual = interior_residual(commutator(rep.X, rep.P), 1j * hbar * rep.identity, rep.N)
        assert residual < 1e-12

    def test_truncation_spoils_last_row(self):
        rep = build_rep(8, 1.0)
        corner = commutator(rep.X, rep.P)[7, 7]
        assert corner == pytest.approx(1j * (1 - 8))

    @pytest.mark.parametrize("N", [3, 0, 4.0, True])
    def test_rejects_small_or_non_integer_size(self, N):
        with pytest.raises(ParameterError):
            build_rep(N, 1.0)

    @pytest.mark.parametrize("hbar", [0.0, -1.0, float("nan")])
    def test_rejects_bad_hbar(self, hbar):
        with pytest.raises(ParameterError):
            build_rep(8, hbar)

    def test_interior_indices(self):
        assert interior_indices(5).tolist() == [0, 1, 2]
        tensor = interior_indices(4, tensor=True).tolist()
        assert tensor == [0, 1, 4, 5]


@pytest.mark.unit
class TestWeylOrdering:
    @pytest.mark.parametrize("N", [8, 16, 32])
    def test_identity_holds_on_interior(self, N):
        assert weyl_residual(build_rep(N, 1.0)) < 1e-9

    def test_weyl_operator_is_hermitian(self):
        ordered = weyl_xp2(build_rep(12, 0.5))
        assert np.array_equal(ordered, ordered.conj().T)

    def test_hbar_scaling(self):
        assert weyl_residual(build_rep(16, 0.25)) < 1e-9


@pytest.mark.unit
class TestBoppShift:
    """Noncommutative Heisenberg algebra from shifted positions."""

    @pytest.mark.parametrize("theta", [0.0, 0.05, 1.3])
    def test_relations_hold(self, theta):
        rep = build_rep(10, 1.0)
        residuals = bopp_residuals(bopp_shift(rep, rep, theta), 1.0)
        assert set(residuals) == {"bopp_xy", "bopp_x_px", "bopp_y_py", "bopp_cross"}
        assert max(residuals.values()) < 1e-9

    def test_commutative_limit_is_exact(self):
        rep = build_rep(8, 1.0)
        residuals = bopp_residuals(bopp_shift(rep, rep, 0.0), 1.0)
        assert residuals["bopp_xy"] == 0.0
        assert residuals["bopp_cross"] == 0.0

    def test_xy_commutator_is_i_theta(self):
        rep = build_rep(8, 2.0)
        shifted = bopp_shift(rep, rep, 0.4)
        block = commutator(shifted.X_nc, shifted.Y_nc)[0, 0]
        assert block == pytest.approx(0.4j)

    def test_mismatched_sizes(self):
        with pytest.raises(ParameterError, match="sizes differ"):
            bopp_shift(build_rep(6, 1.0), build_rep(8, 1.0), 0.1)

    def test_mismatched_hbar(self):
        with pytest.raises(ParameterError, match="hbar"):
            bopp_shift(build_rep(6, 1.0), build_rep(6, 2.0), 0.1)

    def test_negative_theta(self):
        rep = build_rep(6, 1.0)
        with pytest.raises(ParameterError):
            bopp_shift(rep, rep, -0.1)


@pytest.mark.unit
class TestGravityTriviality:
    """A uniform field in noncommutative space is a constant shift of the commutative spectrum."""

    @pytest.mark.parametrize("theta", [0.05, 0.5])
    def test_spectra_agree_after_constant_offset(self, theta):
        rep = build_rep(12, 1.0)
        result = nc_gravity_triviality(rep, rep, m=1.0, g=1.0, theta=theta)
        assert result.max_shift < 1e-6
        assert result.block_residual < 1e-9
        assert result.constant_offset == pytest.approx(theta**2 / 8.0)
        assert len(result.spectrum_nc) == len(result.spectrum_c) == 12 * 10

    def test_commutative_limit_has_no_offset(self):
        rep = build_rep(8, 1.0)
        result = nc_gravity_triviality(rep, rep, m=2.0, g=0.5, theta=0.0)
        assert result.constant_offset == 0.0
        assert result.max_shift < 1e-12

    def test_spectrum_is_taken_from_the_shifted_hamiltonian(self, monkeypatch):
        rep = build_rep(12, 1.0)

        def corrupted(rep_x, rep_y, theta):
            good = bopp_shift(rep_x, rep_y, theta)
            return dataclasses.replace(good, X_nc=5.0 * good.X_nc + 3.0 * good.Py @ good.Py)

        monkeypatch.setattr(operator_algebra, "bopp_shift", corrupted)
        result = nc_gravity_triviality(rep, rep, m=1.0, g=1.0, theta=0.05)
        assert result.max_shift > 1e-3
        assert result.residual >= result.block_residual > 1.0

    def test_tensor_size_cap(self):
        rep = build_rep(33, 1.0)
        with pytest.raises(ParameterError, match="<= 32"):
            nc_gravity_triviality(rep, rep, m=1.0, g=1.0, theta=0.1)

    @pytest.mark.parametrize("m, g", [(0.0, 1.0), (1.0, -1.0)])
    def test_rejects_non_positive_mass_or_field(self, m, g):
        rep = build_rep(8, 1.0)
        with pytest.raises(ParameterError):
            nc_gravity_triviality(rep, rep, m=m, g=g, theta=0.1)


@pytest.mark.unit
class TestAlgebraVerifier:
    def test_default_run_passes(self):
        rows = AlgebraVerifier().run()
        assert len(rows) == 3 * 6 + 1
        assert all(row.passed for row in rows)
        assert rows[-1].check == "gravity_triviality"
        assert {row.N for row in rows[:-1]} == {8, 16, 32}

    def test_tight_tolerance_fails(self):
        rows = AlgebraVerifier(tolerance=1e-15).run()
        assert not all(row.passed for row in rows)

    def test_broken_bopp_shift_fails_triviality_row(self, monkeypatch):
        def corrupted(rep_x, rep_y, theta):
            good = bopp_shift(rep_x, rep_y, theta)
            return dataclasses.replace(good, X_nc=5.0 * good.X_nc + 3.0 * good.Py @ good.Py)

        monkeypatch.setattr(operator_algebra, "bopp_shift", corrupted)
        rows = AlgebraVerifier().run()
        assert rows[-1].check == "gravity_triviality"
        assert not rows[-1].passed

    def test_row_serialization(self):
        row = AlgebraVerifier().run(theta=0.1)[0]
        assert list(row.to_dict()) == ["check", "N", "residual", "tolerance", "passed"]
        assert row.tolerance == 1e-9
