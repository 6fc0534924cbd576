"""Run configuration for prism-covers.

Configuration is only ever read from a file named on the command line with
``--config``; there is no search path and no environment lookup.
"""

from __future__ import annotations

import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field

from prism_covers.utils.errors import ConfigurationError


class ToleranceConfig(BaseModel):
    """Numerical tolerances."""

    matrix: float = Field(default=1e-9, gt=0, description="Relator residual tolerance")
    quadrature: float = Field(default=1e-11, gt=0, description="Absolute quadrature tolerance")
    root: float = Field(default=1e-12, gt=0, description="Tolerance for the radius equation")


class WorkerConfig(BaseModel):
    """Worker pool configuration."""

    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1, description="Worker processes")
    split_depth: int = Field(default=2, ge=0, description="Search-tree prefix depth per work item")


class OutputConfig(BaseModel):
    """Output configuration."""

    digits: int = Field(default=15, ge=1, le=17, description="Significant digits for real values")
    color: bool = Field(default=True, description="Enable color output")


class EnumerationConfig(BaseModel):
    """Low-index enumeration defaults."""

    max_index: int = Field(default=24, ge=1, description="Default maximal index")
    progress_every: int = Field(default=1000, ge=1, description="Log progress every N reps")


class PrismCoversConfig(BaseModel):
    """Main configuration for prism-covers."""

    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    workers: WorkerConfig = Field(default_factory=WorkerConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)


def load_config(config_path: Path | str | None = None) -> PrismCoversConfig:
    """Load configuration from an explicit file, or return defaults.

    Args:
        config_path: Path given with ``--config``

    Returns:
        Loaded configuration

    Raises:
        ConfigurationError: If the file is missing or invalid
    """
    if config_path is None:
        return PrismCoversConfig()

    path = Path(config_path)
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {config_path}")
    try:
        data = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Invalid YAML in config file: {e}") from e
    if data is None:
        return PrismCoversConfig()
    try:
        return PrismCoversConfig.model_validate(data)
    except ValueError as e:
        raise ConfigurationError(f"Invalid config file: {e}") from e


def save_config(config: PrismCoversConfig, config_path: Path | str) -> Path:
    """Save configuration to file.

    Args:
        config: Configuration to save
        config_path: Destination path

    Returns:
        Path where config was saved
    """
    path = Path(config_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = config.model_dump(mode="json", exclude_defaults=True)
    path.write_text(yaml.dump(data, default_flow_style=False, sort_keys=False))
    return path


_config: PrismCoversConfig | None = None


def get_config() -> PrismCoversConfig:
    """Get the global configuration instance (defaults until set)."""
    global _config
    if _config is None:
        _config = PrismCoversConfig()
    return _config


def set_config(config: PrismCoversConfig) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config
