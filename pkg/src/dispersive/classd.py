"""
Class-D functions - piecewise-constant period-1 data

A PiecewisePeriodic stores arcs, not samples: breakpoints b_0 < ... < b_{m-1}
in [0, 1) and one value per arc, values[i] living on (b_i, b_{i+1}) with the
last arc wrapping round to b_0 + 1. At a breakpoint the function takes the
average of the two adjacent arc values.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, field_validator

from features.numerics import two_prod, two_sum
from src.dispersive.errors import InvalidInputError

logger = logging.getLogger(__name__)

MERGE_TOL = 1e-12
JUMP_TOL = 1e-12

Shift = Union[float, int, Fraction]


class ProblemConfig(BaseModel):
    """Equation order and jump half-width of the indicator data"""

    model_config = ConfigDict(frozen=True)

    n: int = 2
    gamma: float = 1.0 / math.pi

    @field_validator("n")
    @classmethod
    def _order(cls, v: int) -> int:
        if v < 2:
            raise ValueError("equation order n must be >= 2")
        return v

    @field_validator("gamma")
    @classmethod
    def _half_width(cls, v: float) -> float:
        if not (0.0 < v < 0.5):
            raise ValueError("gamma must lie strictly inside (0, 1/2)")
        return v


@dataclass(frozen=True)
class PiecewisePeriodic:
    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.breakpoints, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.complex128)
        if b.ndim != 1 or b.shape != v.shape or b.size == 0:
            raise InvalidInputError("need one value per breakpoint and at least one breakpoint")
        if np.any(b < 0.0) or np.any(b >= 1.0):
            raise InvalidInputError("breakpoints must lie in [0, 1)")
        if np.any(np.diff(b) <= 0.0):
            raise InvalidInputError("breakpoints must be strictly increasing")
        b.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "breakpoints", b)
        object.__setattr__(self, "values", v)

    @classmethod
    def constant(cls, value: complex = 0.0) -> "PiecewisePeriodic":
        return cls(np.array([0.0]), np.array([value], dtype=np.complex128))

    @property
    def size(self) -> int:
        return int(self.breakpoints.size)

    def jumps(self) -> np.ndarray:
        """Right limit minus left limit at each breakpoint."""
        return self.values - np.roll(self.values, 1)

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.values.imag) <= tol))

    def __call__(self, x):
        return evaluate(self, x)


def evaluate(f: PiecewisePeriodic, x) -> Union[complex, np.ndarray]:
    """Pointwise value with the midpoint convention at breakpoints (O(log m) per point)."""
    scalar = np.ndim(x) == 0
    y = np.mod(np.atleast_1d(np.asarray(x, dtype=np.float64)), 1.0)
    b, v = f.breakpoints, f.values
    m = b.size

    idx = np.searchsorted(b, y, side="right") - 1  # -1 means the wrapping arc
    idx = np.where(idx < 0, m - 1, idx)
    out = v[idx].copy()

    # distance to the nearest breakpoint, cyclically
    right = np.searchsorted(b, y, side="left")
    cand = np.stack([np.mod(right, m), np.mod(right - 1, m)])
    dist = np.abs(y[None, :] - b[cand])
    dist = np.minimum(dist, 1.0 - dist)
    nearest = np.where(dist[0] <= dist[1], cand[0], cand[1])
    hit = np.minimum(dist[0], dist[1]) <= MERGE_TOL
    if np.any(hit):
        j = nearest[hit]
        out[hit] = 0.5 * (v[j] + v[(j - 1) % m])
    return complex(out[0]) if scalar else out


def indicator(gamma: float) -> PiecewisePeriodic:
    """Periodised characteristic function of [-gamma, gamma]."""
    if not (0.0 < gamma < 0.5):
        raise InvalidInputError(f"gamma={gamma} outside (0, 1/2)")
    return PiecewisePeriodic(np.array([gamma, 1.0 - gamma]), np.array([0.0, 1.0], dtype=np.complex128))


def fourier_coeffs(f: PiecewisePeriodic, ks) -> np.ndarray:
    """
    Closed-form Fourier coefficients c_k = int_0^1 f(x) e(-kx) dx.

    Integrating by parts arc by arc, c_k = (2 pi i k)^{-1} sum_j J_j e(-k b_j)
    where J_j is the jump at b_j; k = 0 gives the mean.
    """
    ks = np.asarray(ks, dtype=np.int64)
    out = np.empty(ks.shape, dtype=np.complex128)
    zero = ks == 0
    out[zero] = mean_value(f)
    if np.any(~zero):
        k = ks[~zero].astype(np.float64)
        jumps = f.jumps()
        phase = np.mod(np.outer(k, f.breakpoints), 1.0)
        out[~zero] = (np.exp(-2j * np.pi * phase) @ jumps) / (2j * np.pi * k)
    return out


def fourier_coeff(f: PiecewisePeriodic, k: int) -> complex:
    return complex(fourier_coeffs(f, np.array([k]))[0])


def arc_lengths(f: PiecewisePeriodic) -> np.ndarray:
    b = f.breakpoints
    return np.diff(np.append(b, b[0] + 1.0))


def mean_value(f: PiecewisePeriodic) -> complex:
    return complex(np.sum(f.values * arc_lengths(f)))


def l2_norm_sq(f: PiecewisePeriodic) -> float:
    """int_0^1 |f|^2 dx, exact arc by arc."""
    return float(math.fsum((np.abs(f.values) ** 2 * arc_lengths(f)).tolist()))


def subtract_rational(points: np.ndarray, num, den: int) -> np.ndarray:
    """
    (points - num/den) mod 1 with num/den carried as a double-double, so each
    result is rounded once instead of drifting with v/q.
    """
    num = np.asarray(num, dtype=np.float64)
    hi = num / den
    p, e = two_prod(hi, float(den))
    lo = ((num - p) - e) / den
    s, err = two_sum(points, -hi)
    r = s - np.floor(s)
    out = r + (err - lo)
    out = np.mod(out, 1.0)
    return np.where(out >= 1.0, 0.0, out)


def _shift_points(points: np.ndarray, shift: Shift) -> np.ndarray:
    if isinstance(shift, Fraction):
        return subtract_rational(points, shift.numerator % shift.denominator, shift.denominator)
    return np.mod(points - float(shift), 1.0)


def translate(f: PiecewisePeriodic, shift: Shift) -> PiecewisePeriodic:
    """g(x) = f(x + shift); breakpoints move to b - shift mod 1."""
    moved = _shift_points(f.breakpoints, shift)
    moved = np.where(moved >= 1.0, 0.0, moved)
    order = np.argsort(moved, kind="stable")
    return PiecewisePeriodic(moved[order], f.values[order])


def _reference_point(points: np.ndarray) -> float:
    """Midpoint of the widest cyclic gap between points."""
    p = np.sort(np.mod(points, 1.0))
    gaps = np.diff(np.append(p, p[0] + 1.0))
    i = int(np.argmax(gaps))
    return float(np.mod(p[i] + 0.5 * gaps[i], 1.0))


def from_jumps(locations: np.ndarray, jumps: np.ndarray, x_ref: float, value_ref: complex) -> PiecewisePeriodic:
    """
    Rebuild a piecewise function from its jumps and one known value.

    Locations closer than MERGE_TOL are merged and their jumps summed; merged
    jumps below JUMP_TOL are dropped, so cancelled discontinuities vanish.
    """
    if locations.size == 0:
        return PiecewisePeriodic.constant(value_ref)
    loc = np.mod(np.asarray(locations, dtype=np.float64), 1.0)
    order = np.argsort(loc, kind="stable")
    loc, jmp = loc[order], np.asarray(jumps, dtype=np.complex128)[order]

    new_cluster = np.empty(loc.size, dtype=bool)
    new_cluster[0] = True
    new_cluster[1:] = np.diff(loc) > MERGE_TOL
    cid = np.cumsum(new_cluster) - 1
    starts = loc[new_cluster]
    summed = np.zeros(starts.size, dtype=np.complex128)
    np.add.at(summed, cid, jmp)
    # a cluster straddling 1.0 wraps onto the first one
    if starts.size > 1 and (starts[0] + 1.0 - loc[-1]) <= MERGE_TOL:
        summed[0] += summed[-1]
        starts, summed = starts[:-1], summed[:-1]

    keep = np.abs(summed) > JUMP_TOL
    starts, summed = starts[keep], summed[keep]
    if starts.size == 0:
        return PiecewisePeriodic.constant(value_ref)

    raw = np.cumsum(summed)
    i_ref = int(np.searchsorted(starts, x_ref, side="right")) - 1
    base = raw[i_ref] if i_ref >= 0 else raw[-1]
    return PiecewisePeriodic(starts, raw - base + value_ref)


def combine(coeffs: Sequence[complex], fs: Sequence[PiecewisePeriodic]) -> PiecewisePeriodic:
    """Pointwise linear combination sum_i coeffs[i] * fs[i]."""
    coeffs = list(coeffs)
    fs = list(fs)
    if len(coeffs) != len(fs) or not fs:
        raise InvalidInputError("combine needs equally long, nonempty coefficient and function lists")
    c = np.asarray(coeffs, dtype=np.complex128)
    locations = np.concatenate([g.breakpoints for g in fs])
    jumps = np.concatenate([ci * g.jumps() for ci, g in zip(c, fs)])
    x_ref = _reference_point(locations)
    value_ref = complex(sum(ci * evaluate(g, x_ref) for ci, g in zip(c, fs)))
    return from_jumps(locations, jumps, x_ref, value_ref)


def superpose_translates(coeffs: np.ndarray, f: PiecewisePeriodic, q: int) -> PiecewisePeriodic:
    """
    sum_{v mod q} coeffs[v] * f(x + v/q), i.e. combine() over the q rational
    translates of f, done as one sweep over the <= q*m sorted jumps.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.shape != (q,):
        raise InvalidInputError(f"expected {q} coefficients, got {c.shape}")
    v = np.arange(q, dtype=np.float64)
    locations = subtract_rational(f.breakpoints[None, :], v[:, None], q).ravel()
    jumps = (c[:, None] * f.jumps()[None, :]).ravel()
    x_ref = _reference_point(locations)
    value_ref = complex(evaluate(f, x_ref + v / q) @ c)
    return from_jumps(locations, jumps, x_ref, value_ref)


def jump_points(f: PiecewisePeriodic, tol: float = JUMP_TOL) -> np.ndarray:
    return f.breakpoints[np.abs(f.jumps()) > tol]


def to_frame(f: PiecewisePeriodic) -> pd.DataFrame:
    """CSV-ready rows (breakpoint, re(value), im(value))."""
    return pd.DataFrame({"breakpoint": f.breakpoints, "re": f.values.real, "im": f.values.imag})


def from_frame(frame: pd.DataFrame) -> PiecewisePeriodic:
    return PiecewisePeriodic(frame["breakpoint"].to_numpy(), frame["re"].to_numpy() + 1j * frame["im"].to_numpy())


def random_piecewise(rng: np.random.Generator, arcs: int, real: bool = True) -> PiecewisePeriodic:
    """Random arcs-piece function; used by the verification suites."""
    b = np.sort(rng.random(arcs))
    v = rng.normal(size=arcs)
    if not real:
        v = v + 1j * rng.normal(size=arcs)
    return PiecewisePeriodic(b, v)
