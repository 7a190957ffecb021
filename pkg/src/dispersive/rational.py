"""
Exact solver at rational times

At t = u/q the Fourier multiplier e(t k^n) only depends on k mod q, so the
solution is a finite superposition of rational translates of the data:

    U(u/q, x) = (1/q) sum_{v mod q} G(u, v; q) f(x + v/q)

and stays piecewise constant with at most q times as many arcs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

import numpy as np
import pandas as pd

from number_theory.expsum import IntPoly, g_row
from src.dispersive.classd import (
    PiecewisePeriodic,
    ProblemConfig,
    arc_lengths,
    jump_points,
    subtract_rational,
    superpose_translates,
)
from src.dispersive.classd import evaluate as evaluate_piecewise
from src.dispersive.errors import InvalidInputError
from src.dispersive.grid import GridField, uniform_grid

logger = logging.getLogger(__name__)

LOCATION_TOL = 1e-10


@dataclass(frozen=True)
class RationalSolution:
    time: Fraction
    field: PiecewisePeriodic
    config: Optional[ProblemConfig] = None
    initial: Optional[PiecewisePeriodic] = None


def _as_time(t: Union[Fraction, int]) -> Fraction:
    t = Fraction(t)
    if t < 0:
        raise InvalidInputError(f"time {t} must be nonnegative")
    return t


def solve_rational(
    f: PiecewisePeriodic,
    t: Union[Fraction, int],
    P: Optional[IntPoly] = None,
    config: Optional[ProblemConfig] = None,
) -> RationalSolution:
    """Exact solution at t = u/q for the dispersion polynomial P (default w^n)."""
    t = _as_time(t)
    if P is None:
        P = IntPoly.monomial(config.n if config is not None else 2)
    u, q = t.numerator, t.denominator
    if q == 1:
        # G(u, v; 1) = 1, so integer times reproduce the data
        return RationalSolution(t, f, config, f)

    coeffs = g_row(P, u, q) / q
    field = superpose_translates(coeffs, f, q)
    logger.info("solve_rational t=%s: %d arcs from %d", t, field.size, f.size)
    return RationalSolution(t, field, config, f)


def evaluate(sol: RationalSolution, x):
    return evaluate_piecewise(sol.field, x)


def grid_eval(sol: RationalSolution, grid_size: int) -> GridField:
    """Exact samples on x_i = -1/2 + i/grid_size, midpoint value at breakpoints."""
    xs = uniform_grid(grid_size)
    meta = {"kind": "rational", "t": f"{sol.time.numerator}/{sol.time.denominator}", "grid": str(grid_size)}
    if sol.config is not None:
        meta.update(n=str(sol.config.n), gamma=repr(sol.config.gamma))
    return GridField(float(sol.time), xs, evaluate_piecewise(sol.field, xs), meta)


def jump_locations(sol: RationalSolution) -> List[float]:
    """Breakpoints with a jump above 1e-12, each congruent to b - v/q for a data jump b."""
    locs = jump_points(sol.field)
    if sol.initial is not None and locs.size:
        _check_locations(locs, jump_points(sol.initial), sol.time.denominator)
    return locs.tolist()


def _check_locations(locs: np.ndarray, initial: np.ndarray, q: int) -> None:
    v = np.arange(q, dtype=np.float64)
    candidates = subtract_rational(initial[None, :], v[:, None], q).ravel()
    d = np.abs(locs[:, None] - candidates[None, :])
    d = np.minimum(d, 1.0 - d).min(axis=1)
    assert np.all(d <= LOCATION_TOL), "jump location not on a shifted data jump"


def arc_table(sol: RationalSolution) -> pd.DataFrame:
    """One row per arc: start, end (may exceed 1 on the wrapping arc), value."""
    b = sol.field.breakpoints
    return pd.DataFrame(
        {
            "start": b,
            "end": b + arc_lengths(sol.field),
            "re": sol.field.values.real,
            "im": sol.field.values.imag,
        }
    )
