"""Configuration management for the library and CLI."""

from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables."""

    # Project Settings
    PROJECT_NAME: str = "sge-elliptic"
    PROJECT_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Theta Series Settings
    THETA_REL_TOL: float = 1e-16
    THETA_MAX_TERMS: int = 10_000
    THETA_MAX_NOME: float = 0.99  # |q| at or above this is rejected

    # Quadrature Settings
    QUAD_EPSABS: float = 1e-14
    QUAD_EPSREL: float = 1e-13
    QUAD_LIMIT: int = 200
    QUAD_ACCEPT_ERR: float = 1e-8  # relative error estimate above this fails

    # Elliptic Function Settings
    POLE_RADIUS: float = 1e-9
    FOURIER_MAX_TERMS: int = 10_000
    PHASE_MARGIN: float = 1e-9
    DEFAULT_TOL: float = 1e-12

    # Verification Settings
    VERIFY_TOL_IDENTITY: float = 1e-9
    VERIFY_TOL_EQUIVALENCE: float = 1e-8
    VERIFY_TOL_TRAIN: float = 1e-6
    VERIFY_SEED: int = 20240611
    VERIFY_SAMPLES: int = 20  # bridge sweeps and random τ
    VERIFY_IDENTITY_SAMPLES: int = 50  # seeded (k, u) pairs for Landen and reciprocal

    # Output Settings
    CSV_DIGITS: int = 17
    REPORT_DIGITS: int = 15

    # Logging Settings
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: Literal["text", "json"] = "text"
    LOG_TO_FILE: bool = False
    LOG_DIR: Path = Path("logs")
    LOG_FILE: str = "sge_elliptic.log"
    LOG_MAX_BYTES: int = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT: int = 5

    # Terminal Settings
    SHOW_SPINNER: bool = True

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    def __init__(self, **kwargs):
        """Initialize settings and create the log directory when needed."""
        super().__init__(**kwargs)
        self._create_directories()

    def _create_directories(self) -> None:
        """Create the log directory if file logging is on."""
        if self.LOG_TO_FILE:
            self.LOG_DIR.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = Settings()
