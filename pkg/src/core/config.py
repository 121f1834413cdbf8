"""Application configuration using pydantic-settings."""
import logging
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("config/settings.yaml")


class KnittingConfig(BaseModel):
    """Knitting limits."""

    slice_cap: int = 64


class MatrixConfig(BaseModel):
    """Matrix search limits."""

    k_max: int = 60
    defect_cap: int = 60


class SectionalConfig(BaseModel):
    """Limits for sectional path searches."""

    path_cap: int = 12


class DegreeConfig(BaseModel):
    """Limits for degree inference."""

    cycle_cap: int = 8


class CorpusConfig(BaseModel):
    """Fixture corpus location."""

    path: Path = Path("fixtures")


class RandomConfig(BaseModel):
    """Seed used by randomized checks."""

    seed: int = 20240101


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = "WARNING"


class Settings(BaseSettings):
    """Application settings loaded from YAML or environment."""

    model_config = SettingsConfigDict(env_prefix="ARQKIT_")

    knitting: KnittingConfig = KnittingConfig()
    matrices: MatrixConfig = MatrixConfig()
    sectional: SectionalConfig = SectionalConfig()
    degrees: DegreeConfig = DegreeConfig()
    corpus: CorpusConfig = CorpusConfig()
    random: RandomConfig = RandomConfig()
    logging: LoggingConfig = LoggingConfig()

    # ARQKIT_FIXTURES
    fixtures: Optional[Path] = None

    @property
    def corpus_path(self) -> Path:
        """Fixture directory, with the environment override applied."""
        return self.fixtures if self.fixtures is not None else self.corpus.path

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Load settings from a YAML file.

        Args:
            path: Path to the YAML configuration file.

        Returns:
            Settings instance with loaded configuration.
        """
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        return cls(**data)

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "Settings":
        """Load settings, falling back to defaults when the file is missing."""
        config_path = path or DEFAULT_CONFIG_PATH
        if not config_path.exists():
            logger.warning(f"Config file not found: {config_path}, using defaults")
            return cls()
        return cls.from_yaml(config_path)
