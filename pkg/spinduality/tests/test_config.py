"""
Tests for environment-driven settings.
"""

import pytest

from spinduality.config import Settings, get_settings, get_testing_settings


@pytest.mark.unit
class TestSettings:
    """Test cases for Settings and its helpers."""

    def test_defaults(self, monkeypatch):
        """Test the default limits and sample sizes."""
        monkeypatch.delenv("SPINDUALITY_SEED", raising=False)
        settings = Settings(_env_file=None)
        assert settings.app_name == "spinduality"
        assert settings.max_tensor_dim == 512
        assert settings.table_kmax == 10
        assert settings.clifford_samples == 200
        assert (2, 3) in settings.duality_pairs
        assert settings.cache_path.name == ".spinduality_cache"

    def test_environment_override(self, monkeypatch):
        """Test SPINDUALITY_-prefixed variables."""
        monkeypatch.setenv("SPINDUALITY_SEED", "42")
        monkeypatch.setenv("SPINDUALITY_MAX_TENSOR_DIM", "64")
        monkeypatch.setenv("SPINDUALITY_DUALITY_PAIRS", "[[1, 1]]")
        settings = Settings(_env_file=None)
        assert settings.seed == 42
        assert settings.max_tensor_dim == 64
        assert settings.duality_pairs == [(1, 1)]

    def test_invalid_environment(self, monkeypatch):
        """Test that out-of-range values are rejected."""
        monkeypatch.setenv("SPINDUALITY_POINT_COUNT", "0")
        with pytest.raises(ValueError):
            Settings(_env_file=None)

    def test_cached(self):
        """Test that get_settings() returns one instance."""
        assert get_settings() is get_settings()

    def test_testing_settings(self, test_settings):
        """Test the reduced limits used by the test suite."""
        assert test_settings.duality_pairs == [(1, 1), (1, 2), (2, 1)]
        assert test_settings.clifford_samples == 10
        assert get_testing_settings().table_kmax == 4
