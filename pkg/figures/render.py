"""
Figure renderer - turns a FigurePreset into CSV tables and SVG plots
"""

import logging
from pathlib import Path
from typing import List

import numpy as np
import pandas as pd

from figures.loader import FigurePreset
from figures.svg import emit_svg, series_from
from number_theory.diophantine import parse_time
from number_theory.expsum import IntPoly
from ringing import make_profile, profile_table, renormalized_solution
from src.dispersive.classd import ProblemConfig, evaluate, indicator
from src.dispersive.grid import GridField, write_grid_csv, write_table
from src.dispersive.rational import grid_eval, solve_rational

logger = logging.getLogger(__name__)


def _slug(time: str) -> str:
    return time.replace("/", "_")


def _emit_parts(preset: FigurePreset, series_by_part, out_dir: Path, suffix: str = "", xlabel: str = "x") -> List[Path]:
    paths = []
    for part in preset.parts:
        name = f"{preset.name}{suffix}_{part}.svg"
        paths.append(emit_svg(series_by_part[part], out_dir / name, title=preset.title, xlabel=xlabel, part=part))
    return paths


def render_rational(preset: FigurePreset, out_dir: Path) -> List[Path]:
    config = ProblemConfig(n=preset.n, gamma=preset.gamma)
    f = indicator(config.gamma)
    paths: List[Path] = []
    fields = []
    for time in preset.times:
        sol = solve_rational(f, parse_time(time), IntPoly.monomial(config.n), config)
        grid = grid_eval(sol, preset.grid)
        paths.append(write_grid_csv(grid, out_dir / f"{preset.name}_{_slug(time)}.csv"))
        fields.append((time, sol, grid))

    by_part = {p: [series_from(g, p, label=time) for time, _, g in fields] for p in preset.parts}
    paths += _emit_parts(preset, by_part, out_dir)

    for i, (lo, hi) in enumerate(preset.windows):
        xs = np.linspace(lo, hi, preset.grid)
        zoomed = {
            p: [series_from(GridField(float(sol.time), xs, evaluate(sol.field, xs)), p, label=time) for time, sol, _ in fields]
            for p in preset.parts
        }
        paths += _emit_parts(preset, zoomed, out_dir, suffix=f"_zoom{i}")
    return paths


def render_renormalized(preset: FigurePreset, out_dir: Path) -> List[Path]:
    f = indicator(preset.gamma)
    ss = np.linspace(preset.s_range[0], preset.s_range[1], preset.count)
    paths: List[Path] = []
    by_part = {p: [] for p in preset.parts}
    for time in preset.times:
        values = renormalized_solution(f, parse_time(time), ss, preset.n, preset.side, preset.gamma)
        field = GridField(0.0, ss, values, {"kind": "renormalized", "t": time, "n": str(preset.n)})
        frame = field.to_frame().rename(columns={"x": "s"})
        paths.append(write_table(frame, out_dir / f"{preset.name}_{_slug(time)}.csv", field.metadata))
        for p in preset.parts:
            by_part[p].append(series_from(field, p, label=time))
    return paths + _emit_parts(preset, by_part, out_dir, xlabel="s")


def render_profile(preset: FigurePreset, out_dir: Path) -> List[Path]:
    paths: List[Path] = []
    by_part = {p: [] for p in preset.parts}
    for n in preset.orders or [preset.n]:
        rows = profile_table(make_profile(n, preset.side), preset.s_range[0], preset.s_range[1], preset.count)
        frame = pd.DataFrame({"s": [r.s for r in rows], "re": [r.value.real for r in rows], "im": [r.value.imag for r in rows]})
        paths.append(write_table(frame, out_dir / f"{preset.name}_n{n}.csv", {"kind": "profile", "n": str(n), "side": str(preset.side)}))
        for p in preset.parts:
            by_part[p].append(series_from(rows, p, label=f"n={n}"))
    return paths + _emit_parts(preset, by_part, out_dir, xlabel="s")


RENDERERS = {
    "rational": render_rational,
    "renormalized": render_renormalized,
    "profile": render_profile,
}


def render(preset: FigurePreset, out_dir: Path) -> List[Path]:
    out_dir = Path(out_dir)
    logger.info("rendering %s (%s) into %s", preset.name, preset.kind, out_dir)
    return RENDERERS[preset.kind](preset, out_dir)
