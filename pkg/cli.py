"""
Talbot Terminal - command line front end

    python cli.py solve   --n 2 --gamma 0.3183098861 --t 1/7 --grid 2048
    python cli.py series  --t 0.4142135623730951 --x 0 --K 10000
    python cli.py ringing --n 3 --s-lo -6 --s-hi 6 --count 121 --svg
    python cli.py approx  --t 0.4142135623730951 --M 4 --delta 0.4
    python cli.py verify  --suite parseval --seed 7
    python cli.py figure  --name fig7

Exit status: 0 on success, 1 when a computation or verify suite fails, 2 for
bad arguments or configuration.
"""

import argparse
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ValidationError, field_validator, model_validator

from figures.loader import load_preset, load_presets
from figures.render import render
from figures.svg import emit_svg
from number_theory.diophantine import (
    DEFAULT_HORIZON,
    DiophantineParams,
    find_approximant,
    in_set_A_m,
    in_set_B,
    measure_estimate,
    parse_time,
)
from ringing import make_profile, profile_table
from src.dispersive.classd import ProblemConfig, indicator
from src.dispersive.errors import ProfileTableError, TalbotError
from src.dispersive.grid import uniform_grid, write_grid_csv, write_table
from src.dispersive.rational import arc_table, grid_eval, jump_locations, solve_rational
from src.dispersive.series import grid_partial_sum, solution_partial_sum
from src.dispersive.settings import Settings, configure_logging
from verification import suites  # noqa: F401  (registers the suites)
from verification.engine import report_frame, require, run as run_suites, suite_names

logger = logging.getLogger("cli")

GAMMA_DEFAULT = 0.31830988618379067


class Command(str, Enum):
    SOLVE = "solve"
    SERIES = "series"
    RINGING = "ringing"
    APPROX = "approx"
    VERIFY = "verify"
    FIGURE = "figure"


class RunConfig(BaseModel):
    command: Command
    n: int = 2
    gamma: float = GAMMA_DEFAULT
    t: Optional[str] = None
    x: Optional[float] = None
    K: int = 10_000
    grid_size: int = 2048
    s_lo: float = -6.0
    s_hi: float = 6.0
    count: int = 121
    side: int = 1
    form: str = "auto"
    delta: float = 0.4
    alpha: Optional[float] = None
    m: int = 2
    M: Optional[float] = None
    M_max: float = DEFAULT_HORIZON
    samples: int = 0
    suite: str = "all"
    full: bool = False
    name: str = "all"
    seed: int = 0
    tol: float = 1e-9
    svg: bool = False
    arcs: bool = False
    output: Optional[Path] = None

    @field_validator("side")
    @classmethod
    def _side(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("side must be +1 or -1")
        return v

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        ProblemConfig(n=self.n, gamma=self.gamma)
        needs_t = {Command.SOLVE, Command.SERIES, Command.APPROX}
        if self.command in needs_t and self.t is None:
            raise ValueError(f"--t is required for {self.command.value}")
        if self.t is not None:
            try:
                parse_time(self.t)
            except (TalbotError, ValueError) as exc:
                raise ValueError(f"cannot parse --t {self.t!r}: {exc}") from None
        if self.command is Command.SOLVE and self.t is not None and "/" not in self.t:
            raise ValueError("solve needs a rational time written as u/q")
        if self.command is Command.RINGING and self.count < 2:
            raise ValueError("--count must be >= 2")
        if self.command is Command.VERIFY and self.suite not in suite_names() + ["all"]:
            raise ValueError(f"unknown suite '{self.suite}'")
        return self

    def output_path(self, default_name: str) -> Path:
        return self.output or Settings.from_env().output_dir / default_name


def _slug(t: str) -> str:
    return t.replace("/", "_").replace(".", "p")


def run_solve(cfg: RunConfig) -> int:
    config = ProblemConfig(n=cfg.n, gamma=cfg.gamma)
    sol = solve_rational(indicator(config.gamma), parse_time(cfg.t), config=config)
    grid = grid_eval(sol, cfg.grid_size)
    path = write_grid_csv(grid, cfg.output_path(f"solve_n{cfg.n}_{_slug(cfg.t)}.csv"))
    print(f"t={cfg.t} arcs={sol.field.size} jumps={len(jump_locations(sol))} plateaus={grid.plateau_count()} -> {path}")
    if cfg.arcs:
        write_table(arc_table(sol), path.with_name(path.stem + "_arcs.csv"), {"t": cfg.t, "n": str(cfg.n)})
    if cfg.svg:
        emit_svg(grid, path.with_suffix(".re.svg"), title=f"U({cfg.t}, x), n={cfg.n}", part="re")
        emit_svg(grid, path.with_suffix(".im.svg"), title=f"U({cfg.t}, x), n={cfg.n}", part="im")
    return 0


def run_series(cfg: RunConfig) -> int:
    f = indicator(cfg.gamma)
    t = parse_time(cfg.t)
    if cfg.x is not None:
        value = solution_partial_sum(f, t, cfg.x, cfg.K, cfg.n)
        print(f"U_K(t={cfg.t}, x={cfg.x}) = {value.real:.17g} {value.imag:+.17g}i  (K={cfg.K})")
        return 0
    grid = grid_partial_sum(f, t, uniform_grid(cfg.grid_size), cfg.K, cfg.n)
    path = write_grid_csv(grid, cfg.output_path(f"series_n{cfg.n}_{_slug(cfg.t)}_K{cfg.K}.csv"))
    print(f"wrote {path}")
    return 0


def run_ringing(cfg: RunConfig) -> int:
    profile = make_profile(cfg.n, cfg.side, cfg.form)
    profile.config["tol"] = cfg.tol
    rows = profile_table(profile, cfg.s_lo, cfg.s_hi, cfg.count)
    frame = pd.DataFrame({"s": [r.s for r in rows], "re": [r.value.real for r in rows], "im": [r.value.imag for r in rows]})
    meta = {"kind": "profile", "n": str(cfg.n), "side": str(cfg.side), "form": cfg.form}
    path = write_table(frame, cfg.output_path(f"ringing_n{cfg.n}_side{cfg.side:+d}.csv"), meta)
    if cfg.svg:
        emit_svg(rows, path.with_suffix(".re.svg"), title=profile.name, xlabel="s", part="re")
        emit_svg(rows, path.with_suffix(".im.svg"), title=profile.name, xlabel="s", part="im")
    print(f"{profile.name}: {len(rows)} points -> {path}")
    return 0


def run_approx(cfg: RunConfig) -> int:
    params = DiophantineParams(n=cfg.n, delta=cfg.delta, alpha=cfg.alpha, m=cfg.m)
    t = parse_time(cfg.t)
    if cfg.M is not None:
        frac = find_approximant(t, cfg.M, params)
        print(f"approximant(M={cfg.M}) = {frac if frac is not None else 'none'}")
    print(f"in A_m (M <= {cfg.M_max:g}): {in_set_A_m(t, params, cfg.M_max)}")
    if 0 < float(t) < 1:
        print(f"in B_m,alpha (alpha={params.effective_alpha:.4g}): {in_set_B(t, params, cfg.M_max)}")
    if cfg.samples:
        frac = measure_estimate(params, 1.0, cfg.samples, cfg.M_max, cfg.seed, use_alpha=cfg.alpha is not None)
        print(f"measure estimate ({cfg.samples} samples, seed {cfg.seed}): {frac:.4f}")
    return 0


def run_verify(cfg: RunConfig) -> int:
    results = run_suites([cfg.suite], cfg.seed, quick=not cfg.full)
    frame = report_frame(results)
    path = write_table(frame, cfg.output_path(f"verify_{cfg.suite}_seed{cfg.seed}.csv"), {"seed": str(cfg.seed)})
    for r in results:
        metrics = ", ".join(f"{k}={v:.3g}" for k, v in r.metrics.items())
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name:<12} {metrics} {r.message}")
    print(f"report -> {path}")
    require(results)
    return 0


def run_figure(cfg: RunConfig) -> int:
    out_dir = cfg.output or Settings.from_env().output_dir
    presets = list(load_presets().values()) if cfg.name == "all" else [load_preset(cfg.name)]
    for preset in presets:
        for path in render(preset, out_dir):
            print(path)
    return 0


HANDLERS = {
    Command.SOLVE: run_solve,
    Command.SERIES: run_series,
    Command.RINGING: run_ringing,
    Command.APPROX: run_approx,
    Command.VERIFY: run_verify,
    Command.FIGURE: run_figure,
}


def run(cfg: RunConfig) -> int:
    """Dispatch one command; computation errors map to exit status 1."""
    try:
        return HANDLERS[cfg.command](cfg)
    except ProfileTableError as exc:
        for s, err in exc.failures:
            print(f"failed s={s:.6g} achieved error {err:.3e}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    except TalbotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="talbot", description="Periodic dispersive solver and ringing toolkit")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, t=False):
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--gamma", type=float, default=GAMMA_DEFAULT)
        p.add_argument("--out", dest="output", type=Path, default=None)
        if t:
            p.add_argument("--t", required=True)

    p = sub.add_parser("solve", help="exact solution at a rational time")
    common(p, t=True)
    p.add_argument("--grid", dest="grid_size", type=int, default=2048)
    p.add_argument("--arcs", action="store_true")
    p.add_argument("--svg", action="store_true")

    p = sub.add_parser("series", help="Fourier partial sums")
    common(p, t=True)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--K", type=int, default=10_000)
    p.add_argument("--grid", dest="grid_size", type=int, default=512)

    p = sub.add_parser("ringing", help="ringing profile table")
    common(p)
    p.add_argument("--side", type=int, default=1)
    p.add_argument("--s-lo", dest="s_lo", type=float, default=-6.0)
    p.add_argument("--s-hi", dest="s_hi", type=float, default=6.0)
    p.add_argument("--count", type=int, default=121)
    p.add_argument("--form", default="auto", choices=["auto", "even", "odd", "odd-weighted"])
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--svg", action="store_true")

    p = sub.add_parser("approx", help="approximants and set membership")
    common(p, t=True)
    p.add_argument("--delta", type=float, default=0.4)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--M", type=float, default=None)
    p.add_argument("--M-max", dest="M_max", type=float, default=DEFAULT_HORIZON)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true")
    p.add_argument("--out", dest="output", type=Path, default=None)

    p = sub.add_parser("figure", help="render figure presets")
    p.add_argument("--name", default="all")
    p.add_argument("--out", dest="output", type=Path, default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    configure_logging(args.log_level)
    fields = {k: v for k, v in vars(args).items() if k != "log_level" and v is not None}
    try:
        cfg = RunConfig(**fields)
    except (ValidationError, TalbotError) as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
