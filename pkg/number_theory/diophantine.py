"""
Diophantine approximation - continued fractions, approximants and the sets
A_m and B_{m,alpha} that decide which irrational times the ringing asymptotics
apply to.

Membership is "for all M >= m", which no computation can check; every
membership test here takes a finite horizon M_max instead.
"""

import bisect
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from features.numerics import split_real, two_prod
from src.dispersive.errors import InvalidInputError

logger = logging.getLogger(__name__)

TimeLike = Union[float, int, str, Fraction, mpmath.mpf]

WORKING_DPS = 40
MAX_TERMS = 64
DEFAULT_HORIZON = 1000.0
DOUBLE_TOL = 4.0 * 2.0**-53


class DiophantineParams(BaseModel):
    """Order n, window exponent delta, cutoff exponent alpha and threshold m"""

    model_config = ConfigDict(frozen=True)

    n: int = 2
    delta: float = 0.4
    alpha: Optional[float] = None
    m: int = 2

    @field_validator("n")
    @classmethod
    def _order(cls, v: int) -> int:
        if v < 2:
            raise ValueError("n must be >= 2")
        return v

    @field_validator("m")
    @classmethod
    def _threshold(cls, v: int) -> int:
        if v < 2:
            raise ValueError("m must be >= 2")
        return v

    @field_validator("alpha")
    @classmethod
    def _alpha_positive(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and v <= 0:
            raise ValueError("alpha must be positive")
        return v

    @model_validator(mode="after")
    def _delta_range(self) -> "DiophantineParams":
        upper = 0.5 if self.n == 2 else 1.0
        if not (0.0 < self.delta < upper):
            raise ValueError(f"delta must lie in (0, {upper}) for n={self.n}")
        if self.alpha is not None and not self.alpha_in_theorem_window:
            logger.debug("alpha=%s outside (1/(n-delta), 1/(n-1)) for n=%s", self.alpha, self.n)
        return self

    @staticmethod
    def default_alpha(n: int, delta: float) -> float:
        """Midpoint of the admissible window (1/(n-delta), 1/(n-1))."""
        return 0.5 * (1.0 / (n - delta) + 1.0 / (n - 1))

    @property
    def effective_alpha(self) -> float:
        return self.alpha if self.alpha is not None else self.default_alpha(self.n, self.delta)

    @property
    def alpha_in_theorem_window(self) -> bool:
        a = self.effective_alpha
        return 1.0 / (self.n - self.delta) < a < 1.0 / (self.n - 1)

    @property
    def alpha_in_measure_window(self) -> bool:
        a = self.effective_alpha
        return 1.0 / (self.n - self.delta) < a < 1.0 / self.delta

    def window(self, M: float) -> Tuple[float, float]:
        """Denominator window (M^delta, M^{n-delta}]."""
        return M**self.delta, M ** (self.n - self.delta)


def time_fraction(u: int, q: int) -> Fraction:
    """Reduced time u/q with 0 <= u <= q."""
    if q < 1 or u < 0 or u > q:
        raise InvalidInputError(f"time {u}/{q} must satisfy 0 <= u <= q, q >= 1")
    return Fraction(u, q)


def parse_time(text: str) -> Union[Fraction, mpmath.mpf]:
    """'u/q' parses to a reduced Fraction, anything else to an extended-precision real."""
    text = text.strip()
    if "/" in text:
        u, q = text.split("/", 1)
        return time_fraction(int(u), int(q))
    with mpmath.workdps(WORKING_DPS):
        return mpmath.mpf(text)


def _working(t: TimeLike) -> Tuple[Union[Fraction, mpmath.mpf], float]:
    """Extended-precision copy of t and the tolerance at which its expansion ends."""
    if isinstance(t, str):
        t = parse_time(t)
    if isinstance(t, Fraction):
        return t, 0.0
    if isinstance(t, mpmath.mpf):
        if not mpmath.isfinite(t):
            raise InvalidInputError("t must be finite")
        return t, float(mpmath.mpf(10) ** (-(WORKING_DPS - 3)))
    t = float(t)
    if not math.isfinite(t):
        raise InvalidInputError("t must be finite")
    return mpmath.mpf(t), DOUBLE_TOL


def _check_unit_interval(t) -> None:
    if not (0 < t < 1):
        raise InvalidInputError(f"t={t} must lie in (0, 1)")


def continued_fraction(t: TimeLike, max_terms: int = MAX_TERMS) -> List[int]:
    """
    Partial quotients [0; a_1, a_2, ...] of t.

    The expansion stops once the current convergent reproduces t to working
    precision, which is how rationals (and doubles) terminate.
    """
    x, tol = _working(t)
    _check_unit_interval(x)
    terms = [0]
    if isinstance(x, Fraction):
        num, den = x.numerator, x.denominator
        while den and len(terms) < max_terms:
            num, den = den, num % den
            if den == 0:
                break
            terms.append(num // den)
        return terms

    with mpmath.workdps(WORKING_DPS):
        u0, q0, u1, q1 = 1, 0, 0, 1  # convergents j-1 and j
        rem = x
        while len(terms) < max_terms:
            if rem == 0:
                break
            inv = 1 / rem
            a = int(mpmath.floor(inv))
            terms.append(a)
            u0, q0, u1, q1 = u1, q1, a * u1 + u0, a * q1 + q0
            if abs(x - mpmath.mpf(u1) / q1) <= tol:
                break
            rem = inv - a
    return terms


def _convergents_from_terms(terms: Sequence[int]) -> List[Fraction]:
    out = []
    u0, q0, u1, q1 = 1, 0, terms[0], 1
    out.append(Fraction(u1, q1))
    for a in terms[1:]:
        u0, q0, u1, q1 = u1, q1, a * u1 + u0, a * q1 + q0
        out.append(Fraction(u1, q1))
    return out


def convergents(t: TimeLike, count: int) -> List[Fraction]:
    """First `count` convergents u_j/q_j (fewer when the expansion terminates)."""
    if count < 1:
        raise InvalidInputError("count must be >= 1")
    terms = continued_fraction(t, max_terms=max(count, 2))
    return _convergents_from_terms(terms)[:count]


def intermediate_fractions(t: TimeLike, count: int, max_per_gap: int = 1000) -> List[Fraction]:
    """(u_{j-1} + k u_j)/(q_{j-1} + k q_j), 1 <= k < a_{j+1}, for the first `count` gaps."""
    terms = continued_fraction(t, max_terms=count + 2)
    convs = _convergents_from_terms(terms)
    out = []
    for j in range(1, min(count, len(convs) - 1) + 1):
        a_next = terms[j + 1] if j + 1 < len(terms) else 0
        prev, cur = convs[j - 1], convs[j]
        for k in range(1, min(a_next, max_per_gap + 1)):
            out.append(Fraction(prev.numerator + k * cur.numerator, prev.denominator + k * cur.denominator))
    return out


def approximation_gap(t: TimeLike, frac: Fraction) -> float:
    """q |t q - u|, which is < 1 exactly when u/q is an approximant (|t - u/q| < 1/q^2)."""
    x, _ = _working(t)
    u, q = frac.numerator, frac.denominator
    if isinstance(x, Fraction):
        return float(q * abs(x * q - u))
    with mpmath.workdps(WORKING_DPS):
        return float(q * abs(x * q - u))


class ApproximantTable:
    """
    All approximants of t with denominator <= q_max, sorted by denominator.

    Every solution of |t - u/q| < 1/q^2 is a convergent or an intermediate
    fraction, so those two families are scanned and filtered.
    """

    def __init__(self, t: TimeLike, q_max: float):
        self.t, _ = _working(t)
        self.q_max = q_max
        self.terms = continued_fraction(t)
        convs = _convergents_from_terms(self.terms)
        self.convergents = [c for c in convs if c.denominator <= q_max]

        rows: List[Tuple[int, int, bool]] = []
        for c in self.convergents:
            if self._is_approximant(np.array([c.numerator]), np.array([c.denominator]))[0]:
                rows.append((c.denominator, c.numerator, True))
        # gap j sits between convergents j-1 and j; gap 0 starts from 1/0
        for j in range(0, len(convs) - 1):
            a_next = self.terms[j + 1]
            u_prev, q_prev = (1, 0) if j == 0 else (convs[j - 1].numerator, convs[j - 1].denominator)
            cur = convs[j]
            if q_prev + cur.denominator > q_max or a_next < 2:
                continue
            k_max = min(a_next - 1, int((q_max - q_prev) // cur.denominator))
            ks = np.arange(1, k_max + 1, dtype=np.int64)
            us = u_prev + ks * cur.numerator
            qs = q_prev + ks * cur.denominator
            good = self._is_approximant(us, qs)
            rows.extend((int(q), int(u), False) for u, q in zip(us[good], qs[good]))

        rows = [r for r in rows if math.gcd(r[0], r[1]) == 1]
        rows.sort(key=lambda r: (r[0], not r[2]))
        self.qs = [r[0] for r in rows]
        self.fractions = [Fraction(r[1], r[0]) for r in rows]
        self.is_convergent = [r[2] for r in rows]

    def _is_approximant(self, us: np.ndarray, qs: np.ndarray) -> np.ndarray:
        # |t q - u| < 1/q, with t q carried as a double-double
        if isinstance(self.t, Fraction):
            return np.array([abs(self.t * int(q) - int(u)) * int(q) < 1 for u, q in zip(us, qs)], dtype=bool)
        t_hi, t_lo = split_real(self.t)
        qf = qs.astype(np.float64)
        p, e = two_prod(t_hi, qf)
        resid = np.abs((p - us.astype(np.float64)) + e + t_lo * qf)
        return resid * qf < 1.0

    def best_in_window(self, lo: float, hi: float) -> Optional[Fraction]:
        """Largest-denominator convergent in (lo, hi], else the largest intermediate."""
        i = bisect.bisect_right(self.qs, lo)
        j = bisect.bisect_right(self.qs, hi)
        if i >= j:
            return None
        window = range(i, j)
        conv = [k for k in window if self.is_convergent[k]]
        pick = conv[-1] if conv else j - 1
        return self.fractions[pick]

    def has_in_window(self, lo: float, hi: float) -> bool:
        i = bisect.bisect_right(self.qs, lo)
        return i < len(self.qs) and self.qs[i] <= hi


def _assert_approximant(t, frac: Fraction, lo: float, hi: float) -> None:
    q = frac.denominator
    assert lo < q <= hi, f"{frac} outside window ({lo}, {hi}]"
    assert approximation_gap(t, frac) < 1.0, f"{frac} violates |t - u/q| < 1/q^2"


def find_approximant(t: TimeLike, M: float, params: DiophantineParams) -> Optional[Fraction]:
    """An approximant u/q of t with M^delta < q <= M^{n-delta}, or None."""
    if M < 2:
        raise InvalidInputError("M must be >= 2")
    x, _ = _working(t)
    _check_unit_interval(x)
    lo, hi = params.window(M)
    frac = ApproximantTable(x, hi).best_in_window(lo, hi)
    if frac is not None:
        _assert_approximant(x, frac, lo, hi)
    return frac


def _horizon_check(table: ApproximantTable, params: DiophantineParams, M_start: float, M_max: float) -> bool:
    for M in range(max(2, math.ceil(M_start)), int(math.floor(M_max)) + 1):
        lo, hi = params.window(M)
        if not table.has_in_window(lo, hi):
            logger.debug("no approximant for M=%d in (%.4g, %.4g]", M, lo, hi)
            return False
    return True


def in_set_A_m(t: TimeLike, params: DiophantineParams, M_max: float = DEFAULT_HORIZON) -> bool:
    """Finite-horizon proxy: an approximant exists in the window for every integer M in [m, M_max]."""
    if M_max < params.m:
        raise InvalidInputError("M_max must be >= m")
    x, _ = _working(t)
    table = ApproximantTable(x, params.window(M_max)[1])
    return _horizon_check(table, params, params.m, M_max)


def in_set_B(t: TimeLike, params: DiophantineParams, M_max: float = DEFAULT_HORIZON) -> bool:
    """Same as in_set_A_m but starting at M = m t^{-alpha}; an empty range is vacuously true."""
    x, _ = _working(t)
    _check_unit_interval(x)
    start = params.m * float(x) ** (-params.effective_alpha)
    if start > M_max:
        logger.debug("B-membership horizon empty: m t^-alpha = %.4g > M_max", start)
        return True
    table = ApproximantTable(x, params.window(M_max)[1])
    return _horizon_check(table, params, start, M_max)


def measure_estimate(
    params: DiophantineParams,
    t0: float = 1.0,
    samples: int = 1000,
    M_max: float = DEFAULT_HORIZON,
    seed: int = 0,
    use_alpha: bool = True,
) -> float:
    """
    Monte Carlo fraction of t ~ U[0, t0] in B_{m,alpha} (or A_m when
    use_alpha is off). Sample i is the i-th draw of default_rng(seed), so the
    estimate is reproducible and a prefix of a longer run.
    """
    if samples < 1:
        raise InvalidInputError("samples must be >= 1")
    ts = t0 * np.random.default_rng(seed).random(samples)
    hits = 0
    for t in ts:
        t = float(t)
        if not (0.0 < t < 1.0):
            continue
        member = in_set_B(t, params, M_max) if use_alpha else in_set_A_m(t, params, M_max)
        hits += int(member)
    fraction = hits / samples
    logger.info("measure_estimate n=%d delta=%.3g m=%d t0=%.3g: %d/%d", params.n, params.delta, params.m, t0, hits, samples)
    return fraction


def measure_lower_bound(params: DiophantineParams, c: float, t0: float = 1.0) -> float:
    """
    1 - c m^{1+2 delta-n} on [0, 1], or t0 (1 - c t0^{(n-1-2 delta) alpha} m^{1+delta-n})
    on [0, t0] for the B sets.
    """
    n, d, m = params.n, params.delta, params.m
    if t0 >= 1.0:
        return 1.0 - c * m ** (1 + 2 * d - n)
    a = params.effective_alpha
    return t0 * (1.0 - c * t0 ** ((n - 1 - 2 * d) * a) * m ** (1 + d - n))


def fit_measure_constant(params: DiophantineParams, estimate: float) -> float:
    """Smallest c for which measure_lower_bound(params, c) matches an estimate on [0, 1]."""
    return (1.0 - estimate) * params.m ** (params.n - 1 - 2 * params.delta)


def admissible_rational(t: Fraction, params: DiophantineParams) -> bool:
    """Rational approach condition t <= m q^{-1/(alpha (n - delta))}."""
    q = t.denominator
    exponent = -1.0 / (params.effective_alpha * (params.n - params.delta))
    return float(t) <= params.m * q**exponent
