"""Unit tests for the config module."""

import pytest
from pydantic import ValidationError

from prism_covers.utils.config import (
    EnumerationConfig,
    OutputConfig,
    PrismCoversConfig,
    ToleranceConfig,
    WorkerConfig,
    get_config,
    load_config,
    save_config,
    set_config,
)
from prism_covers.utils.errors import ConfigurationError


class TestToleranceConfig:
    """Tests for ToleranceConfig model."""

    def test_default_values(self):
        """Test default values."""
        config = ToleranceConfig()
        assert config.matrix == 1e-9
        assert config.quadrature == 1e-11
        assert config.root == 1e-12

    def test_rejects_non_positive(self):
        """Test that tolerances must be positive."""
        with pytest.raises(ValidationError):
            ToleranceConfig(matrix=0)
        with pytest.raises(ValidationError):
            ToleranceConfig(quadrature=-1e-9)


class TestWorkerConfig:
    """Tests for WorkerConfig model."""

    def test_default_at_least_one(self):
        """Test the default worker count is usable."""
        assert WorkerConfig().workers >= 1
        assert WorkerConfig().split_depth == 2

    def test_rejects_zero_workers(self):
        """Test that the worker count must be at least one."""
        with pytest.raises(ValidationError):
            WorkerConfig(workers=0)


class TestOutputConfig:
    """Tests for OutputConfig model."""

    def test_default_values(self):
        """Test default values."""
        config = OutputConfig()
        assert config.digits == 15
        assert config.color is True


class TestLoadConfig:
    """Tests for load_config and save_config."""

    def test_defaults_without_file(self):
        """Test that no file gives the defaults."""
        config = load_config(None)
        assert config == PrismCoversConfig(workers=config.workers)
        assert config.enumeration == EnumerationConfig()

    def test_load_from_file(self, tmp_path):
        """Test loading a partial YAML file."""
        path = tmp_path / "run.yaml"
        path.write_text("tolerances:\n  matrix: 1.0e-8\nworkers:\n  workers: 3\n")
        config = load_config(path)
        assert config.tolerances.matrix == 1e-8
        assert config.tolerances.quadrature == 1e-11
        assert config.workers.workers == 3

    def test_empty_file(self, tmp_path):
        """Test that an empty file gives the defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config(path).tolerances == ToleranceConfig()

    def test_missing_file(self, tmp_path):
        """Test that a missing file is an error."""
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(tmp_path / "nope.yaml")
        assert exc_info.value.code == "CONFIG_ERROR"

    def test_invalid_yaml(self, tmp_path):
        """Test that malformed YAML is an error."""
        path = tmp_path / "bad.yaml"
        path.write_text("tolerances: [unclosed\n")
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_invalid_values(self, tmp_path):
        """Test that a negative tolerance in the file is an error."""
        path = tmp_path / "neg.yaml"
        path.write_text("tolerances:\n  matrix: -1\n")
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_save_and_reload(self, tmp_path):
        """Test that saved settings load back."""
        config = PrismCoversConfig(
            tolerances=ToleranceConfig(matrix=1e-7),
            workers=WorkerConfig(workers=2, split_depth=3),
        )
        path = save_config(config, tmp_path / "sub" / "saved.yaml")
        loaded = load_config(path)
        assert loaded.tolerances.matrix == 1e-7
        assert loaded.workers.split_depth == 3


class TestGlobalConfig:
    """Tests for get_config and set_config."""

    def test_set_then_get(self):
        """Test that set_config replaces the global instance."""
        original = get_config()
        try:
            custom = PrismCoversConfig(output=OutputConfig(digits=6))
            set_config(custom)
            assert get_config().output.digits == 6
        finally:
            set_config(original)
