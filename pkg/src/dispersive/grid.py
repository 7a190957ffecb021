"""
GridField - samples of a solution on a uniform x-grid, plus CSV emission
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Union

import numpy as np
import pandas as pd

from src.dispersive.errors import EmitError, InvalidInputError

logger = logging.getLogger(__name__)


def uniform_grid(grid_size: int) -> np.ndarray:
    """x_i = -1/2 + i/grid_size, i = 0..grid_size-1"""
    if grid_size < 1:
        raise InvalidInputError("grid_size must be >= 1")
    return -0.5 + np.arange(grid_size, dtype=np.float64) / grid_size


@dataclass
class GridField:
    t: float
    xs: np.ndarray
    values: np.ndarray
    metadata: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.xs = np.asarray(self.xs, dtype=np.float64)
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.xs.shape != self.values.shape:
            raise InvalidInputError("xs and values must have the same length")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"x": self.xs, "re": self.values.real, "im": self.values.imag})

    def plateau_count(self, tol: float = 1e-9) -> int:
        """Number of distinct values, rounding at tol."""
        keys = np.round(self.values.real / tol) + 1j * np.round(self.values.imag / tol)
        return int(np.unique(keys).size)


def write_table(frame: pd.DataFrame, path: Union[str, Path], metadata: Dict[str, str]) -> Path:
    """`# key=value` header lines, then the frame with 17 significant digits."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as fh:
            for key, value in metadata.items():
                fh.write(f"# {key}={value}\n")
            frame.to_csv(fh, index=False, float_format="%.17g", lineterminator="\n")
    except OSError as exc:
        raise EmitError(f"cannot write {path}: {exc}") from exc
    logger.info("wrote %s (%d rows)", path, len(frame))
    return path


def read_table(path: Union[str, Path]) -> pd.DataFrame:
    return pd.read_csv(path, comment="#", float_precision="round_trip")


def write_grid_csv(grid: GridField, path: Union[str, Path]) -> Path:
    meta = {"t": repr(grid.t), **grid.metadata}
    return write_table(grid.to_frame(), path, meta)
