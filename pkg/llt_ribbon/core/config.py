"""
Configuration management using Pydantic Settings.
Values come from LLT_-prefixed environment variables or a .env file.
"""
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator


class Settings(BaseSettings):
    """
    Runtime settings.

    Every brute-force entry point reads MAX_VERTICES when no explicit limit
    is passed; the CLI builds a fresh instance per invocation so environment
    overrides such as LLT_MAX_VERTICES always apply.
    """
    # Project
    PROJECT_NAME: str = "llt-ribbon"
    VERSION: str = "1.0.0"

    # Enumeration
    MAX_VERTICES: int = 8
    WORKERS: int = 1

    # Verification grids
    GRID_MAX_WEIGHT: int = 3

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_CONFIG: Optional[str] = None  # defaults to the bundled logging.ini

    @field_validator("MAX_VERTICES", "WORKERS")
    @classmethod
    def at_least_one(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("GRID_MAX_WEIGHT")
    @classmethod
    def nonnegative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be nonnegative")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def upper_level(cls, v: str) -> str:
        return v.upper()

    model_config = SettingsConfigDict(
        env_prefix="LLT_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore"
    )


# Create global settings instance
settings = Settings()
