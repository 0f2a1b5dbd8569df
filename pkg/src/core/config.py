"""Configuration management for the Molnár means toolkit."""

import os
from pathlib import Path
from typing import Optional
from pydantic import BaseModel, Field, field_validator
from dotenv import load_dotenv


DEFAULT_SEED = 20240601


class AppConfig(BaseModel):
    """Application configuration."""

    seed: int = Field(default=DEFAULT_SEED, description="Default seed for randomized checks")
    log_level: str = Field(default="INFO", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Log file path")
    tolerance: float = Field(
        default=1e-10, gt=0, description="Absolute tolerance of quadrature-based strip evaluation"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize the level name to what loguru expects."""
        level = v.strip().upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{v}'")
        return level


class Config:
    """Singleton configuration manager."""

    _instance: Optional["Config"] = None
    _config: Optional[AppConfig] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
        return cls._instance

    @classmethod
    def load(cls) -> AppConfig:
        """Load configuration from environment variables (and `.env`)."""
        if cls._config is None:
            load_dotenv()

            cls._config = AppConfig(
                seed=int(os.getenv("MOLNAR_SEED", str(DEFAULT_SEED))),
                log_level=os.getenv("MOLNAR_LOG_LEVEL", "INFO"),
                log_file=os.getenv("MOLNAR_LOG_FILE") or None,
                tolerance=float(os.getenv("MOLNAR_TOLERANCE", "1e-10")),
            )

            # Create log directory if it doesn't exist
            if cls._config.log_file:
                log_path = Path(cls._config.log_file)
                log_path.parent.mkdir(parents=True, exist_ok=True)

        return cls._config

    @classmethod
    def get(cls) -> AppConfig:
        """Get current configuration."""
        if cls._config is None:
            return cls.load()
        return cls._config

    @classmethod
    def reset(cls) -> None:
        """Forget the loaded configuration so the next `get()` re-reads the environment."""
        cls._config = None
