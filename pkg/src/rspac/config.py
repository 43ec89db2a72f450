"""
Process-level settings.

Values come from the environment (``RSPAC_*``) and an optional ``.env`` file.
Per-run simulation parameters live in ``SimConfig`` (modules/sim/models.py);
these settings only provide the defaults it falls back to.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime defaults shared by the CLI and the simulation harness."""

    model_config = SettingsConfigDict(
        env_prefix="RSPAC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = Field(default="INFO", description="Root logger level for the CLI")
    workers: int = Field(default=1, ge=1, description="Worker processes for frame simulation")
    cache_dir: Path = Field(
        default=Path(".rspac-cache"),
        description="Directory holding cached bias files",
    )
    fano_delta: float = Field(default=2.0, gt=0.0, description="Fano threshold step in bits")
    visit_budget: int = Field(
        default=1_000_000,
        ge=1,
        description="Maximum node visits per sequential decode",
    )
    bias_samples: int = Field(
        default=20_000,
        ge=10_000,
        description="Monte-Carlo samples for bit-channel cutoff-rate estimation",
    )
    bias_seed: int = Field(default=2021, ge=0, description="Seed for bias estimation")


@lru_cache
def get_settings() -> Settings:
    """Get the cached settings instance."""
    return Settings()
