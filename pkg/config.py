"""
Configuration settings for the Torelli toolkit.

This module centralizes all configuration settings for the library, CLI and
API, making it easier to manage environment variables and default values.
Every setting can be overridden with a ``TORELLI_`` prefixed environment
variable or a ``.env`` file.
"""
import logging
import sys
from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, read once at import time."""

    model_config = SettingsConfigDict(env_prefix="TORELLI_", env_file=".env", extra="ignore")

    # Application information
    PROJECT_NAME: str = "Torelli Toolkit"
    PROJECT_VERSION: str = "2.0.0"

    # Environment
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Verification suites
    DEFAULT_SEED: int = 1
    SUITE_WORKERS: int = Field(default=1, ge=1)
    SUITE_RANDOM_WORDS: int = 10_000
    SUITE_RANDOM_WORD_LENGTH: int = 40
    SUITE_EXHAUSTIVE_LENGTH: int = 6
    SUITE_INSERTION_TRIALS: int = 1_000
    SUITE_CERTIFICATE_MEMBERS: int = 1_000
    SUITE_CERTIFICATE_FACTORS: int = 20
    SUITE_CORRECTION_VECTORS: int = 1_000
    SUITE_CORRECTION_BOUND: int = 5

    # API server
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8080


settings = Settings()


class CliConfig(BaseModel):
    """Global flags shared by every CLI command."""

    g: int = Field(ge=1)
    b: int = Field(ge=1)
    output: Literal["text", "json"] = "json"
    seed: int = settings.DEFAULT_SEED


def configure_logging(level: str | None = None) -> None:
    """Set up root logging the same way for the CLI, the suites and the API."""
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
