"""Configuration loader - reads config/settings.yaml. Missing file means defaults."""
from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field

ROOT = Path(__file__).parent.parent


class OutputConfig(BaseModel):
    format: Literal["plain", "json", "latex"] = "plain"


class ExpansionConfig(BaseModel):
    jobs: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=16, ge=1)


class CacheConfig(BaseModel):
    enabled: bool = False
    path: str = "./data/verified.db"


class LoggingConfig(BaseModel):
    level: str = "WARNING"


class Settings(BaseModel):
    model_config = ConfigDict(extra="ignore")
    output: OutputConfig = OutputConfig()
    expansion: ExpansionConfig = ExpansionConfig()
    cache: CacheConfig = CacheConfig()
    logging: LoggingConfig = LoggingConfig()

    def cache_path(self, project_root: Path | None = None) -> Path:
        """Absolute path of the verification cache database."""
        p = Path(self.cache.path)
        if not p.is_absolute():
            p = (project_root or ROOT) / p
        return p


def settings_path(project_root: Path | None = None) -> Path:
    return (project_root or ROOT) / "config" / "settings.yaml"


def load_raw(project_root: Path | None = None) -> dict:
    """Raw YAML mapping, {} when the file does not exist."""
    path = settings_path(project_root)
    if not path.exists():
        return {}
    with open(path, encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def save_raw(data: dict, project_root: Path | None = None) -> None:
    path = settings_path(project_root)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        yaml.dump(data, f, default_flow_style=False, sort_keys=False)


def load_config(project_root: Path | None = None) -> Settings:
    """Load and validate settings from YAML."""
    return Settings(**load_raw(project_root))
