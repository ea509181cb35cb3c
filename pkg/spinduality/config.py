"""
Configuration settings for spinduality.

Uses pydantic-settings for environment variable management
and configuration validation. Every field can be overridden with a
SPINDUALITY_-prefixed environment variable or a .env file.
"""

from functools import lru_cache
from pathlib import Path
from typing import List, Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Runtime settings loaded from environment variables.

    The acceptance limits bound the ranges `verify-all` sweeps by default.
    """

    model_config = SettingsConfigDict(
        env_prefix="SPINDUALITY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Information
    app_name: str = Field(default="spinduality", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")

    # Run Configuration
    cache_dir: str = Field(
        default=".spinduality_cache", description="Character table cache directory"
    )
    max_tensor_dim: int = Field(
        default=512, ge=1, description="Largest (2n)^k accepted without --force"
    )
    seed: int = Field(default=20250731, description="Seed for randomized checks")
    point_count: int = Field(
        default=3, ge=1, le=16, description="Prime-coordinate evaluation points"
    )
    output_format: str = Field(default="text", description="Report format")
    fail_fast: bool = Field(default=False, description="Stop at the first failure")

    # Logging Configuration
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log message format",
    )

    # Acceptance Limits
    table_kmax: int = Field(default=10, ge=0, description="Largest k for tables")
    bridge_kmax: int = Field(default=8, ge=0, description="Largest k for the bridge")
    presentation_kmax: int = Field(
        default=6, ge=0, description="Largest k for presentation relations"
    )
    isomorphism_kmax: int = Field(
        default=5, ge=0, description="Largest k for the isomorphism rank test"
    )
    clifford_kmax: int = Field(
        default=6, ge=0, description="Largest k for the Clifford module"
    )
    xi_kmax: int = Field(default=8, ge=0, description="Largest k for xi products")
    partition_kmax: int = Field(
        default=30, ge=0, description="Largest k for |DP_k| = |OP_k|"
    )
    duality_pairs: List[Tuple[int, int]] = Field(
        default=[(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 3)],
        description="(n, k) pairs checked by verify-all",
    )

    # Sample Sizes
    clifford_samples: int = Field(
        default=200, ge=1, le=10000, description="Random Clifford elements per k"
    )
    homomorphism_pairs: int = Field(
        default=100, ge=1, le=10000, description="Random pairs per (n, k)"
    )
    associativity_triples: int = Field(
        default=60, ge=1, le=10000, description="Random triples per k"
    )

    @property
    def cache_path(self) -> Path:
        return Path(self.cache_dir)


# Cached settings instance
@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()


def get_testing_settings() -> Settings:
    """Get test-specific settings with reduced limits."""
    settings = Settings()
    settings.table_kmax = 4
    settings.bridge_kmax = 4
    settings.presentation_kmax = 3
    settings.isomorphism_kmax = 3
    settings.clifford_kmax = 3
    settings.xi_kmax = 4
    settings.partition_kmax = 12
    settings.duality_pairs = [(1, 1), (1, 2), (2, 1)]
    settings.clifford_samples = 10
    settings.homomorphism_pairs = 10
    settings.associativity_triples = 10
    return settings


# Global settings instance
settings = Settings()
