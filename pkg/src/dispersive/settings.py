"""
Process-wide settings read from the environment
"""

import logging
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, field_validator

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseModel):
    output_dir: Path = Path("output")
    log_level: str = "INFO"
    figures_config: Path = Path("config/figures.yaml")

    @field_validator("log_level")
    @classmethod
    def _level(cls, v: str) -> str:
        v = v.upper()
        if not isinstance(logging.getLevelName(v), int):
            raise ValueError(f"unknown log level {v}")
        return v

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            output_dir=Path(os.environ.get("TALBOT_OUTPUT_DIR", "output")),
            log_level=os.environ.get("TALBOT_LOG_LEVEL", "INFO"),
            figures_config=Path(os.environ.get("TALBOT_FIGURES_CONFIG", "config/figures.yaml")),
        )


def configure_logging(level: Optional[str] = None) -> None:
    level = (level or Settings.from_env().log_level).upper()
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    # matplotlib's font manager is chatty at DEBUG
    logging.getLogger("matplotlib").setLevel(max(logging.getLevelName(level), logging.WARNING))
