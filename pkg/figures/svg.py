"""
Static SVG line plots, 800x500, byte-for-byte reproducible
"""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ringing.base_profile import ProfilePoint  # noqa: E402
from src.dispersive.errors import EmitError, InvalidInputError  # noqa: E402
from src.dispersive.grid import GridField  # noqa: E402

logger = logging.getLogger(__name__)

WIDTH, HEIGHT = 800, 500
Series = Tuple[str, np.ndarray, np.ndarray]
Plottable = Union[GridField, Sequence[ProfilePoint]]

_RC = {
    "svg.hashsalt": "talbot-terminal",
    "svg.fonttype": "none",
    "path.simplify": False,
    "lines.linewidth": 1.0,
}


def series_from(data: Plottable, part: str = "re", label: str = "") -> Series:
    """(label, x, y) from a GridField or a profile table."""
    if isinstance(data, GridField):
        xs, values = data.xs, data.values
    else:
        rows = list(data)
        xs = np.array([r.s for r in rows], dtype=np.float64)
        values = np.array([r.value for r in rows], dtype=np.complex128)
    ys = values.real if part == "re" else values.imag
    return label, xs, ys


def emit_svg(
    series: Union[Plottable, List[Series]],
    path: Union[str, Path],
    title: str = "",
    xlabel: str = "x",
    ylabel: str = "",
    part: str = "re",
) -> Path:
    """Polyline plot of one or more series into a standalone SVG file."""
    if isinstance(series, GridField) or (series and isinstance(series[0], ProfilePoint)):
        series = [series_from(series, part)]
    series = [s for s in series if len(s[1])]
    if not series:
        raise InvalidInputError("nothing to plot")

    path = Path(path)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(WIDTH / 72.0, HEIGHT / 72.0), dpi=72)
        try:
            for label, xs, ys in series:
                ax.plot(xs, ys, label=label or None)
            ax.set_title(title)
            ax.set_xlabel(xlabel)
            ax.set_ylabel(ylabel or part)
            ax.grid(True, linewidth=0.3)
            if any(label for label, _, _ in series):
                ax.legend(loc="best", fontsize="small")
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise EmitError(f"cannot write {path}: {exc}") from exc
        finally:
            plt.close(fig)
    logger.info("wrote %s (%d series)", path, len(series))
    return path
