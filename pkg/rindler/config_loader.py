"""Configuration loader for rindler runs.

Packaged defaults and tolerances live in ``rindler/config/defaults.yaml``. A run is
configured by a flat JSON file whose keys override ``run_defaults``; environment
variables and command-line flags override the file.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml  # type: ignore[import-untyped]

from rindler.errors import ConfigError, ParameterError
from rindler.units_params import PARAM_KEYS, PhysicalParams, params_from_mapping

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
ENV_OUTPUT_DIR = "RINDLER_OUTPUT_DIR"
ENV_LOG_LEVEL = "RINDLER_LOG_LEVEL"

_INT_KEYS = ("levels", "grid_points")
_FLOAT_KEYS = ("zeta_max", "tolerance")


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI run needs."""

    params: PhysicalParams
    levels: int
    zeta_max: float
    grid_points: int
    output_dir: Path
    format: str
    numeric: bool = False
    tolerance: float = 1e-9
    log_level: str = "INFO"

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.params.to_dict(),
            "levels": self.levels,
            "zeta_max": self.zeta_max,
            "grid_points": self.grid_points,
            "output_dir": str(self.output_dir),
            "format": self.format,
            "numeric": self.numeric,
            "tolerance": self.tolerance,
            "log_level": self.log_level,
        }


class ConfigLoader:
    """Loads and provides access to the packaged defaults."""

    def __init__(self, config_path: str | Path | None = None) -> None:
        """Initialize config loader.

        Args:
            config_path: Optional path to a YAML file. If None, uses the packaged defaults.
        """
        if config_path is None:
            self.config_path = Path(__file__).parent / "config" / "defaults.yaml"
        else:
            self.config_path = Path(config_path)

        self._config: dict[str, Any] | None = None

    def _load_config(self) -> dict[str, Any]:
        """Load configuration from YAML file."""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with self.config_path.open(encoding="utf-8") as f:
            config = yaml.safe_load(f)

        if not isinstance(config, dict):
            raise ValueError(f"Configuration file must contain a YAML dictionary: {self.config_path}")

        return config

    @property
    def config(self) -> dict[str, Any]:
        """Get loaded configuration, loading if necessary."""
        if self._config is None:
            self._config = self._load_config()
        return self._config

    def get_config_section(self, section_name: str, default: Any = None) -> Any:
        """Get a configuration section with safe fallback."""
        return self.config.get(section_name, default or {})

    def get_config_value(self, section_name: str, key_name: str, default: Any = None) -> Any:
        """Get a specific configuration value from a section."""
        section = self.get_config_section(section_name, {})
        if not isinstance(section, dict):
            return default
        return section.get(key_name, default)

    def get_tolerance(self, name: str, default: float = 1e-9) -> float:
        return float(self.get_config_value("tolerances", name, default))

    def get_numeric_setting(self, name: str, default: Any = None) -> Any:
        return self.get_config_value("numerics", name, default)

    def get_classical_setting(self, name: str, default: Any = None) -> Any:
        return self.get_config_value("classical", name, default)

    def get_run_defaults(self) -> dict[str, Any]:
        defaults = self.get_config_section("run_defaults")
        return dict(defaults) if isinstance(defaults, dict) else {}

    def load_run_config(self, path: str | Path | None = None, overrides: dict[str, Any] | None = None) -> RunConfig:
        """Merge defaults, a JSON run file, the environment and explicit overrides into a RunConfig.

        Later sources win. ``None`` values in ``overrides`` are ignored so unset CLI flags
        leave earlier values alone.
        """
        merged = self.get_run_defaults()

        if path is not None:
            merged.update(_read_run_file(Path(path), allowed=set(merged)))

        if os.environ.get(ENV_OUTPUT_DIR):
            merged["output_dir"] = os.environ[ENV_OUTPUT_DIR]
        if os.environ.get(ENV_LOG_LEVEL):
            merged["log_level"] = os.environ[ENV_LOG_LEVEL]

        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key not in merged:
                raise ConfigError(f"Unknown configuration key: {key}")
            merged[key] = value

        return _build_run_config(merged)


def _read_run_file(path: Path, allowed: set[str]) -> dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"Run configuration not found: {path}")
    try:
        with path.open(encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Run configuration is not valid JSON ({path}): {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"Run configuration must be a flat JSON object: {path}")
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigError(f"Unknown configuration keys in {path}: {', '.join(unknown)}")
    nested = sorted(key for key, value in data.items() if isinstance(value, (dict, list)))
    if nested:
        raise ConfigError(f"Run configuration must be flat; nested values under: {', '.join(nested)}")

    logger.info(f"Loaded run configuration from {path}")
    return data


def _build_run_config(values: dict[str, Any]) -> RunConfig:
    try:
        params = params_from_mapping({key: values[key] for key in PARAM_KEYS})
    except ParameterError as e:
        raise ConfigError(f"Invalid physical parameters: {e}") from e

    try:
        ints = {key: _as_int(key, values[key]) for key in _INT_KEYS}
        floats = {key: float(values[key]) for key in _FLOAT_KEYS}
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid numeric setting: {e}") from e

    if ints["levels"] < 1:
        raise ConfigError(f"levels must be >= 1, got {ints['levels']}")
    if ints["grid_points"] < 50:
        raise ConfigError(f"grid_points must be >= 50, got {ints['grid_points']}")
    if not floats["zeta_max"] > 0.0:
        raise ConfigError(f"zeta_max must be > 0, got {floats['zeta_max']}")
    if not floats["tolerance"] > 0.0:
        raise ConfigError(f"tolerance must be > 0, got {floats['tolerance']}")

    output_format = str(values["format"]).lower()
    if output_format not in OUTPUT_FORMATS:
        raise ConfigError(f"format must be one of {OUTPUT_FORMATS}, got {values['format']!r}")
    log_level = str(values["log_level"]).upper()
    if log_level not in LOG_LEVELS:
        raise ConfigError(f"log_level must be one of {LOG_LEVELS}, got {values['log_level']!r}")
    if not isinstance(values["numeric"], bool):
        raise ConfigError(f"numeric must be true or false, got {values['numeric']!r}")

    return RunConfig(
        params=params,
        levels=ints["levels"],
        zeta_max=floats["zeta_max"],
        grid_points=ints["grid_points"],
        output_dir=Path(values["output_dir"]),
        format=output_format,
        numeric=values["numeric"],
        tolerance=floats["tolerance"],
        log_level=log_level,
    )


def _as_int(key: str, value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{key} must be an integer, got {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"{key} must be an integer, got {value!r}")
        return int(value)
    return int(value)


# Global config loader instance
_config_loader: ConfigLoader | None = None


def get_config_loader() -> ConfigLoader:
    """Get singleton configuration loader instance."""
    global _config_loader
    if _config_loader is None:
        _config_loader = ConfigLoader()
    return _config_loader
