"""Application configuration."""
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, overridable through ``HEXLAP_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="HEXLAP_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Construction
    VERTEX_BUDGET: int = 1_000_000

    # Spectra
    MERGE_TOLERANCE: float = 1e-7
    JACOBI_TOLERANCE: float = 1e-12
    JACOBI_MAX_SWEEPS: int = 100

    # Polynomial roots
    ROOT_GRID_POINTS: int = 1000
    ROOT_FALLBACK_GRID_POINTS: int = 100_000
    ROOT_TOLERANCE: float = 1e-12

    # Spanning trees: counts with more digits are reported as log10 and factors only
    TAU_EXACT_DIGITS: int = 4000

    # Logging
    LOG_LEVEL: str = "WARNING"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
