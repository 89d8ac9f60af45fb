"""Configuration management using pydantic-settings."""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

DEFAULT_FIXTURE_DIR = Path(__file__).parent / "fixtures" / "data"


class OutputFormat(str, Enum):
    """Supported output formats."""

    TEXT = "text"
    STRUCTURED = "structured"


class Settings(BaseSettings):
    """Run configuration.

    Values come from keyword arguments only (command-line flags are passed in
    by the CLI). Environment variables and dotenv files are ignored so that a
    run is reproducible from its command line alone.
    """

    model_config = SettingsConfigDict(
        case_sensitive=False,
        validate_default=True,
    )

    # Series truncation
    truncation: int = Field(
        default=10,
        ge=0,
        description="Truncation order N for Hilbert series (coefficients valid through q^N)",
    )
    identity_order: int = Field(
        default=12,
        ge=0,
        description="Default truncation order for q-identity checks",
    )
    conjecture_order: int = Field(
        default=8,
        ge=0,
        description="Default truncation order for conjecture and manifest checks",
    )

    # Execution
    jobs: int = Field(default=1, ge=1, description="Worker processes for parallel runs")
    max_pairs: int = Field(
        default=100_000,
        ge=1,
        description="Upper bound on the Buchberger pair queue",
    )
    max_aux: int = Field(
        default=16,
        ge=0,
        description="Upper bound on auxiliary variables introduced by greedy quadratization",
    )

    # Input / output
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT,
        description="Output format for command results",
    )
    fixture_dir: Path = Field(
        default=DEFAULT_FIXTURE_DIR,
        description="Directory holding the JSON fixture corpus",
    )
    log_level: str = Field(
        default="INFO",
        description="Logging level",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Use constructor arguments as the only settings source."""
        return (init_settings,)

    @property
    def structured(self) -> bool:
        """Whether output should be machine readable."""
        return self.output_format == OutputFormat.STRUCTURED


# Global settings instance - lazy loaded
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def configure_settings(**overrides: Any) -> Settings:
    """Replace the global settings with a new instance built from overrides.

    Args:
        **overrides: Field values, typically parsed command-line flags

    Returns:
        The new global settings instance
    """
    global _settings
    _settings = Settings(**{k: v for k, v in overrides.items() if v is not None})
    return _settings


def reset_settings() -> None:
    """Drop the global settings instance (used by tests)."""
    global _settings
    _settings = None
