"""
Test configuration and fixtures for spinduality tests.

This module provides pytest fixtures for settings with reduced acceptance
limits, an isolated table cache directory, seeded random generators and
the small tensor spaces most duality tests run on.
"""

import random

import pytest

from spinduality.config import get_testing_settings
from spinduality.services.tensor_duality import tensor_space


@pytest.fixture(scope="session")
def test_settings():
    """Get test-specific settings."""
    return get_testing_settings()


@pytest.fixture
def tmp_cache_dir(tmp_path):
    """Create an empty cache directory for one test."""
    cache_dir = tmp_path / "cache"
    cache_dir.mkdir()
    return cache_dir


@pytest.fixture
def rng():
    """Seeded random generator, fresh for every test."""
    return random.Random(20250731)


@pytest.fixture(scope="session")
def space_1_1():
    return tensor_space(1, 1)


@pytest.fixture(scope="session")
def space_1_2():
    return tensor_space(1, 2)


@pytest.fixture(scope="session")
def space_2_2():
    return tensor_space(2, 2)


@pytest.fixture(scope="session")
def space_1_3():
    return tensor_space(1, 3)
