from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, field_validator

from src.dispersive.settings import Settings


class FigurePreset(BaseModel):
    name: str
    kind: str
    title: str = ""
    enabled: bool = True
    n: int = 2
    orders: List[int] = []
    gamma: float = 0.31830988618379069
    side: int = 1
    times: List[str] = []
    grid: int = 4096
    parts: List[str] = ["re"]
    windows: List[Tuple[float, float]] = []
    s_range: Tuple[float, float] = (-4.0, 4.0)
    count: int = 201

    @field_validator("kind")
    @classmethod
    def _kind(cls, v: str) -> str:
        if v not in ("rational", "renormalized", "profile"):
            raise ValueError(f"unknown figure kind '{v}'")
        return v

    @field_validator("parts")
    @classmethod
    def _parts(cls, v: List[str]) -> List[str]:
        bad = [p for p in v if p not in ("re", "im")]
        if bad:
            raise ValueError(f"unknown parts {bad}")
        return v


def _read(path: Optional[Path]) -> Dict:
    path = Path(path or Settings.from_env().figures_config)
    with path.open("r") as fh:
        return yaml.safe_load(fh) or {}


def load_presets(path: Optional[Path] = None) -> Dict[str, FigurePreset]:
    cfg = _read(path)
    defaults = cfg.get("defaults", {})
    presets = {}
    for entry in cfg.get("figures", []):
        preset = FigurePreset(**{**defaults, **entry})
        presets[preset.name] = preset
    return presets


def load_preset(name: str, path: Optional[Path] = None) -> FigurePreset:
    presets = load_presets(path)
    if name not in presets:
        raise KeyError(f"unknown figure preset '{name}'")
    return presets[name]
