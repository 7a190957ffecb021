"""
Complete exponential sums and Weyl-sum bound functionals

G(u,v;q) = sum_{w mod q} e_q(u P(w) - v w) is evaluated with exact integer
phase reduction; a whole row v = 0..q-1 is one FFT of w -> e_q(u P(w)).
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from features.numerics import fsum_complex, polynomial_phase, unit_phase
from src.dispersive.errors import InvalidInputError

logger = logging.getLogger(__name__)

DEFAULT_EPS = 0.05

# int64 Horner steps stay exact while q**2 fits
_INT64_MODULUS_LIMIT = 3_000_000_000


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients highest degree first"""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[0] == 0:
            raise InvalidInputError("leading coefficient must be nonzero")
        if len(coeffs) < 2:
            raise InvalidInputError("polynomial degree must be >= 1")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, n: int) -> "IntPoly":
        return cls((1,) + (0,) * n)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic_monomial(self) -> bool:
        return self.coefficients[0] == 1 and not any(self.coefficients[1:])

    def evaluate_mod(self, w: np.ndarray, q: int) -> np.ndarray:
        """P(w) mod q by Horner's rule with a reduction after every step."""
        if q > _INT64_MODULUS_LIMIT:
            return np.array([self._eval_int(int(x)) % q for x in np.ravel(w)], dtype=object).reshape(np.shape(w))
        w = np.mod(np.asarray(w, dtype=np.int64), q)
        acc = np.zeros_like(w)
        for c in self.coefficients:
            acc = np.mod(acc * w + (c % q), q)
        return acc

    def _eval_int(self, w: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * w + c
        return acc


@dataclass(frozen=True)
class RealPoly:
    """Real polynomial f(k) = a_n k^n + ... + a_0, highest degree first"""

    coefficients: Tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) < 2 or coeffs[0] == 0:
            raise InvalidInputError("need degree >= 1 with nonzero leading coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, alpha, n: int) -> "RealPoly":
        return cls((alpha,) + (0.0,) * n)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _check_modulus(q: int):
    if q <= 0:
        raise InvalidInputError(f"modulus q must be positive, got {q}")


def _phase_residues(P: IntPoly, u: int, v: int, q: int) -> np.ndarray:
    w = np.arange(q, dtype=np.int64)
    up = np.mod(P.evaluate_mod(w, q) * (u % q), q) if q <= _INT64_MODULUS_LIMIT else None
    if up is None:
        return np.array([(u * P._eval_int(int(x)) - v * int(x)) % q for x in w], dtype=np.float64)
    return np.mod(up - np.mod(w * (v % q), q), q)


def complete_sum(P: IntPoly, u: int, v: int, q: int) -> complex:
    """G(u,v;q) by direct summation of the q terms."""
    _check_modulus(q)
    residues = _phase_residues(P, u, v, q)
    value = fsum_complex(unit_phase(residues / q))
    assert abs(value) <= q * (1 + 1e-12)
    return value


def g_row(P: IntPoly, u: int, q: int) -> np.ndarray:
    """
    Row v -> G(u,v;q) for v = 0..q-1 in O(q log q).

    numpy's pocketfft handles prime and other non-smooth lengths through
    Bluestein reindexing, so no padding is needed here.
    """
    _check_modulus(q)
    residues = _phase_residues(P, u, 0, q)
    row = np.fft.fft(unit_phase(residues / q))
    logger.debug("g_row q=%d u=%d done", q, u)
    return row


def g_matrix(P: IntPoly, q: int) -> np.ndarray:
    """All rows u = 0..q-1 at once (q x q), for scans over every (u, v)."""
    _check_modulus(q)
    w = np.arange(q, dtype=np.int64)
    pw = P.evaluate_mod(w, q)
    us = np.arange(q, dtype=np.int64)
    residues = np.mod(us[:, None] * pw[None, :], q)
    return np.fft.fft(unit_phase(residues / q), axis=1)


def weyl_sum(f: RealPoly, k_lo: int, k_hi: int) -> complex:
    """sum_{k=k_lo}^{k_hi} e(f(k)) with double-double phase reduction."""
    if k_lo > k_hi:
        raise InvalidInputError("k_lo must not exceed k_hi")
    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    phase = polynomial_phase(f.coefficients, ks)
    return fsum_complex(unit_phase(phase))


def gauss_bound_ratio(P: IntPoly, u: int, v: int, q: int) -> float:
    """|G(u,v;q)| / ((u,v,q)^{1/2} q^{1/2})"""
    if not P.is_monic_monomial:
        raise InvalidInputError("gauss_bound_ratio is defined for P(w) = w^n")
    g = math.gcd(math.gcd(u, v), q)
    return abs(complete_sum(P, u, v, q)) / math.sqrt(g * q)


def gauss_ratio_row_max(n: int, q: int) -> float:
    """max over all (u, v) mod q of gauss_bound_ratio, via g_matrix."""
    G = np.abs(g_matrix(IntPoly.monomial(n), q))
    us = np.arange(q)[:, None]
    vs = np.arange(q)[None, :]
    g = np.gcd(np.gcd(us, vs), q)
    return float(np.max(G / np.sqrt(g * q)))


def weyl_bound(mu: float, q: int, n: int, eps: float = DEFAULT_EPS) -> float:
    """
    N-th root of mu^{N-1} + mu^{N-n+eps} (mu^{n-1}/q + 1)(mu + q) log q,
    N = 2^{n-1}, directly comparable with |sum e(f(k))|.
    """
    if mu < 2 or q < 2:
        raise InvalidInputError("need mu >= 2 and q >= 2")
    N = 2 ** (n - 1)
    inner = mu ** (N - 1) + mu ** (N - n + eps) * (mu ** (n - 1) / q + 1.0) * (mu + q) * math.log(q)
    return inner ** (1.0 / N)


def hua_bound(M: float, q: int, n: int, eps: float = DEFAULT_EPS) -> float:
    """{1/M + 1/q + q M^{-n}}^{2^{1-n}} M^{1+eps} q^{eps}"""
    if M < 2 or q < 1:
        raise InvalidInputError("need M >= 2 and q >= 1")
    braces = 1.0 / M + 1.0 / q + q * M ** (-n)
    return braces ** (2.0 ** (1 - n)) * M ** (1.0 + eps) * q ** eps


def weyl_shift_sum(alpha_n: float, mu: int, n: int) -> float:
    """
    sum_{1 <= m <= (mu-1)^{n-1}} min{mu, 1/(2 ||n! alpha_n m||)}, with ||.||
    the distance to the nearest integer.
    """
    if mu < 2:
        raise InvalidInputError("need mu >= 2")
    ms = np.arange(1, (mu - 1) ** (n - 1) + 1, dtype=np.int64)
    frac = polynomial_phase((math.factorial(n) * alpha_n, 0.0), ms)
    dist = np.minimum(frac, 1.0 - frac)
    with np.errstate(divide="ignore"):
        terms = np.where(dist > 0, 1.0 / (2.0 * dist), np.inf)
    return float(np.sum(np.minimum(float(mu), terms)))


def weyl_shift_bound(alpha_n: float, mu: int, n: int, eps: float = DEFAULT_EPS) -> float:
    """N-th root of mu^{N-1} + mu^{N-n+eps} * weyl_shift_sum."""
    N = 2 ** (n - 1)
    inner = mu ** (N - 1) + mu ** (N - n + eps) * weyl_shift_sum(alpha_n, mu, n)
    return inner ** (1.0 / N)


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log y against log x."""
    lx = np.log(np.asarray(xs, dtype=np.float64))
    ly = np.log(np.asarray(ys, dtype=np.float64))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)
