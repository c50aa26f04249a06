"""Tests for configuration settings."""

import importlib
import os
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from src.supra_sim import config
from src.supra_sim.config import Settings


class TestSettings:
    """Tests for Settings configuration."""

    def test_defaults(self):
        """Test defaults with an empty environment."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)
            assert settings.environment == "development"
            assert settings.threads == 1
            assert settings.strict is False
            assert settings.output_dir == Path("./out")

    def test_prefixed_environment(self):
        """Test that SUPRA_ variables override the defaults."""
        with patch.dict(
            os.environ,
            {"SUPRA_THREADS": "4", "SUPRA_STRICT": "true", "SUPRA_LOG_LEVEL": "DEBUG"},
            clear=True,
        ):
            settings = Settings(_env_file=None)
            assert settings.threads == 4
            assert settings.strict is True
            assert settings.log_level == "DEBUG"

    def test_unprefixed_ignored(self):
        """Test that bare variable names are not picked up."""
        with patch.dict(os.environ, {"THREADS": "8"}, clear=True):
            assert Settings(_env_file=None).threads == 1

    def test_invalid_threads(self):
        """Test that a zero thread count is rejected."""
        with patch.dict(os.environ, {"SUPRA_THREADS": "0"}, clear=True):
            with pytest.raises(ValidationError):
                Settings(_env_file=None)

    def test_newton_settings(self):
        """Test that Newton defaults flow from the environment."""
        with patch.dict(
            os.environ, {"SUPRA_NEWTON_TOL": "1e-10", "SUPRA_NEWTON_MAX_ITERS": "7"}, clear=True
        ):
            newton = Settings(_env_file=None).newton_settings()
            assert newton.tol_residual == 1e-10
            assert newton.max_iters == 7
            assert newton.linear_max_iters == 500

    def test_import_reads_no_environment(self):
        """Test that loading the module does not build settings from the environment."""
        with patch.dict(os.environ, {"SUPRA_THREADS": "0"}, clear=True):
            module = importlib.reload(config)
        assert not hasattr(module, "settings")
