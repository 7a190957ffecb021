"""
Fourier partial sums at arbitrary (t, x), convergence diagnostics and the
smooth-cutoff split of the solution into a low-frequency part U* and a tail.

Every sum pairs +k with -k and runs over ascending |k|; phases t k^n and x k
are reduced mod 1 separately in double-double arithmetic before they are
added, so large K does not eat the phase accuracy.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

from features.numerics import frac_times_int, frac_times_power, fsum_complex, unit_phase
from src.dispersive.classd import PiecewisePeriodic, fourier_coeffs, mean_value
from src.dispersive.errors import InvalidInputError
from src.dispersive.grid import GridField

logger = logging.getLogger(__name__)

TimeLike = Union[float, Fraction, mpmath.mpf]

CHUNK = 1024
CAUCHY_SAMPLES = 128


class SmoothCutoff:
    """
    phi(x) = sigma(1/2 - log|x| / log 4) on 1/2 <= |x| <= 2, 1 inside, 0 outside,
    with sigma the quintic smoothstep. phi(x) + phi(1/x) = 1 holds exactly
    because sigma(u) + sigma(1 - u) = 1.
    """

    name = "quintic-smoothstep"

    @staticmethod
    def smoothstep(u):
        u = np.clip(u, 0.0, 1.0)
        return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))

    def __call__(self, x):
        a = np.abs(np.asarray(x, dtype=np.float64))
        with np.errstate(divide="ignore"):
            u = 0.5 - np.log(a) / math.log(4.0)
        out = np.where(a <= 0.5, 1.0, np.where(a >= 2.0, 0.0, self.smoothstep(u)))
        return float(out) if np.ndim(x) == 0 else out

    def complement(self, x):
        """1 - phi(x), i.e. phi(1/x) for x != 0."""
        return 1.0 - self(x)


def _check_K(K: int) -> None:
    if K < 0:
        raise InvalidInputError("K must be >= 0")


def _phases(t: TimeLike, xs: np.ndarray, ks: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """e(t k^n + x k) and e(t (-k)^n - x k) as (len(xs), len(ks)) matrices."""
    tp = frac_times_power(t, ks, n)
    tm = tp if n % 2 == 0 else np.mod(-tp, 1.0)
    xk = frac_times_int(xs[:, None], ks[None, :])
    return unit_phase(np.mod(tp[None, :] + xk, 1.0)), unit_phase(np.mod(tm[None, :] - xk, 1.0))


def _paired_terms(f: PiecewisePeriodic, t, xs: np.ndarray, ks: np.ndarray, n: int) -> np.ndarray:
    plus, minus = _phases(t, xs, ks, n)
    return fourier_coeffs(f, ks)[None, :] * plus + fourier_coeffs(f, -ks)[None, :] * minus


def _sawtooth_terms(t, xs: np.ndarray, ks: np.ndarray, n: int) -> np.ndarray:
    plus, minus = _phases(t, xs, ks, n)
    return (plus - minus) / ks[None, :]


def _chunks(k_lo: int, k_hi: int):
    for start in range(k_lo, k_hi + 1, CHUNK):
        yield np.arange(start, min(start + CHUNK, k_hi + 1), dtype=np.int64)


def partial_sum_S(t: TimeLike, x: float, K: int, n: int = 2) -> complex:
    """S_K(t, x) = sum_{0 < |k| <= K} e(t k^n + x k) / k"""
    if K < 1:
        raise InvalidInputError("K must be >= 1")
    xs = np.array([float(x)])
    parts = [_sawtooth_terms(t, xs, ks, n)[0] for ks in _chunks(1, K)]
    return fsum_complex(np.concatenate(parts))


def solution_partial_sum(f: PiecewisePeriodic, t: TimeLike, x: float, K: int, n: int) -> complex:
    """U_K(t, x) = c_0 + sum_{0 < |k| <= K} c_k e(t k^n + x k)"""
    _check_K(K)
    xs = np.array([float(x)])
    parts = [np.array([mean_value(f)])]
    parts += [_paired_terms(f, t, xs, ks, n)[0] for ks in _chunks(1, K)]
    return fsum_complex(np.concatenate(parts))


def grid_partial_sum(f: PiecewisePeriodic, t: TimeLike, xs, K: int, n: int) -> GridField:
    """solution_partial_sum on a whole grid, accumulated chunk by chunk."""
    _check_K(K)
    xs = np.asarray(xs, dtype=np.float64)
    acc = np.full(xs.shape, mean_value(f), dtype=np.complex128)
    for ks in _chunks(1, K):
        acc += _paired_terms(f, t, xs, ks, n).sum(axis=1)
    logger.info("grid_partial_sum: %d points, K=%d, n=%d", xs.size, K, n)
    return GridField(float(t), xs, acc, {"kind": "series", "K": str(K), "n": str(n)})


def cauchy_profile(
    t: TimeLike,
    x: Optional[Sequence[float]],
    Ks: Sequence[int],
    n: int,
) -> List[float]:
    """
    sup over an x-sample of |S_{K'} - S_K| for consecutive pairs (K, K') of Ks.

    The differences are block sums over K < |k| <= K', so the whole profile
    costs one pass up to max(Ks). x=None uses 128 cell midpoints of [-1/2, 1/2).
    """
    Ks = [int(k) for k in Ks]
    if any(b < a for a, b in zip(Ks, Ks[1:])):
        raise InvalidInputError("Ks must be non-decreasing")
    if x is None:
        xs = -0.5 + (np.arange(CAUCHY_SAMPLES) + 0.5) / CAUCHY_SAMPLES
    else:
        xs = np.atleast_1d(np.asarray(x, dtype=np.float64))

    out = []
    for lo, hi in zip(Ks, Ks[1:]):
        block = np.zeros(xs.shape, dtype=np.complex128)
        if hi > lo:
            for ks in _chunks(lo + 1, hi):
                block += _sawtooth_terms(t, xs, ks, n).sum(axis=1)
        out.append(float(np.max(np.abs(block))))
    return out


def _cutoff_range(t: TimeLike, alpha: float) -> Tuple[float, int]:
    tf = float(t)
    if tf <= 0:
        raise InvalidInputError("t must be positive")
    scale = tf**alpha
    return scale, int(math.floor(2.0 / scale))


def smoothed_solution_U_star(
    f: PiecewisePeriodic,
    t: TimeLike,
    x,
    n: int,
    alpha: float,
    cutoff: Optional[SmoothCutoff] = None,
):
    """
    U*(t, x) = c_0 + sum_{k != 0} phi(k t^alpha) c_k e(t k^n + x k); only
    |k| <= 2 t^-alpha contribute.
    """
    cutoff = cutoff or SmoothCutoff()
    scale, k_max = _cutoff_range(t, alpha)
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    acc = np.full(xs.shape, mean_value(f), dtype=np.complex128)
    for ks in _chunks(1, k_max):
        weights = cutoff(ks * scale)
        acc += (_paired_terms(f, t, xs, ks, n) * weights[None, :]).sum(axis=1)
    return complex(acc[0]) if np.ndim(x) == 0 else acc


def tail_split(
    f: PiecewisePeriodic,
    t: TimeLike,
    x: float,
    n: int,
    alpha: float,
    K: int,
    cutoff: Optional[SmoothCutoff] = None,
) -> Tuple[complex, complex]:
    """
    (U*, U_large) with U_large = sum_{0 < |k| <= K} phi(1/(k t^alpha)) c_k e(...),
    so that U* + U_large equals the partial sum U_K.
    """
    cutoff = cutoff or SmoothCutoff()
    scale, k_max = _cutoff_range(t, alpha)
    if K < k_max:
        raise InvalidInputError(f"K={K} must cover the cutoff support 2 t^-alpha = {k_max}")
    u_star = smoothed_solution_U_star(f, t, float(x), n, alpha, cutoff)
    xs = np.array([float(x)])
    parts = []
    for ks in _chunks(1, K):
        weights = cutoff.complement(ks * scale)
        parts.append(_paired_terms(f, t, xs, ks, n)[0] * weights)
    large = fsum_complex(np.concatenate(parts)) if parts else 0j
    return u_star, large
