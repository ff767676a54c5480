"""Shared pytest fixtures for unit, integration and acceptance layers."""

import pytest

from rindler.config_loader import ENV_LOG_LEVEL, ENV_OUTPUT_DIR
from rindler.specfun import gauss_laguerre
from rindler.units_params import natural_units


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep a developer's RINDLER_* variables out of every test."""
    monkeypatch.delenv(ENV_OUTPUT_DIR, raising=False)
    monkeypatch.delenv(ENV_LOG_LEVEL, raising=False)


@pytest.fixture
def natural_params():
    """m = c = hbar = alpha = 1, no transverse momentum, commutative."""
    return natural_units()


@pytest.fixture
def slow_frame_params():
    """Natural units with alpha = 0.1."""
    return natural_units(alpha=0.1)


@pytest.fixture(scope="session")
def laguerre_rule_32():
    """32-point Gauss-Laguerre rule."""
    return gauss_laguerre(32)


@pytest.fixture
def output_dir(tmp_path):
    """Fresh output directory for a CLI run."""
    path = tmp_path / "out"
    path.mkdir()
    return path
