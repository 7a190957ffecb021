"""
True solution in the ringing variable x = side*gamma + s t^{1/n}

Rational times go through the exact solver, one solve per call however many
s-points are asked for; other times fall back to Fourier partial sums with
K >= 10 t^{-alpha}.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from number_theory.diophantine import DiophantineParams
from number_theory.expsum import IntPoly
from src.dispersive.classd import PiecewisePeriodic, evaluate, jump_points
from src.dispersive.errors import InvalidInputError
from src.dispersive.rational import solve_rational
from src.dispersive.series import grid_partial_sum

logger = logging.getLogger(__name__)

TimeLike = Union[Fraction, float]


def _half_width(f: PiecewisePeriodic, gamma: Optional[float]) -> float:
    if gamma is not None:
        return gamma
    jumps = jump_points(f)
    if jumps.size != 2:
        raise InvalidInputError("pass gamma explicitly for data that is not an indicator")
    return float(jumps[0])


def _series_cutoff(t: float, n: int) -> int:
    alpha = DiophantineParams.default_alpha(n, 0.4 if n == 2 else 0.5)
    return int(math.ceil(10.0 * t ** (-alpha)))


def solution_at(f: PiecewisePeriodic, t: TimeLike, xs, n: int, K: Optional[int] = None) -> np.ndarray:
    """U(t, x) for an array of x, exact at rational t."""
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    if isinstance(t, (Fraction, int)):
        t = Fraction(t)
        if t == 0:
            return np.asarray(evaluate(f, xs))
        return np.asarray(evaluate(solve_rational(f, t, IntPoly.monomial(n)).field, xs))
    t = float(t)
    if t <= 0:
        raise InvalidInputError("t must be positive")
    K = K or _series_cutoff(t, n)
    return grid_partial_sum(f, t, xs, K, n).values


def renormalized_solution(
    f: PiecewisePeriodic,
    t: TimeLike,
    s,
    n: int,
    side: int = 1,
    gamma: Optional[float] = None,
):
    """U(t, side*gamma + s t^{1/n}); s may be a scalar or an array."""
    if side not in (1, -1):
        raise InvalidInputError("side must be +1 or -1")
    g = _half_width(f, gamma)
    scale = float(t) ** (1.0 / n) if float(t) > 0 else 0.0
    ss = np.asarray(s, dtype=np.float64)
    xs = side * g + np.atleast_1d(ss) * scale
    values = solution_at(f, t, xs, n)
    return complex(values[0]) if ss.ndim == 0 else values


def bulk_deviation(f: PiecewisePeriodic, t: TimeLike, xs: Sequence[float], n: int) -> float:
    """max |U(t, x) - f(x)| over xs; meant for points away from the jumps."""
    xs = np.asarray(xs, dtype=np.float64)
    return float(np.max(np.abs(solution_at(f, t, xs, n) - np.asarray(evaluate(f, xs)))))
