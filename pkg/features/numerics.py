"""
Numerics - double-double phase reduction and compensated sums

Phases like t*k**n reach 1e15..1e20 for the frequency ranges used by the
partial sums, so reducing them mod 1 in plain doubles loses every digit that
matters. The helpers here keep the product as an unevaluated hi+lo pair and
reduce each part separately.
"""

import math
from fractions import Fraction
from typing import Tuple, Union

import mpmath
import numpy as np

RealLike = Union[float, int, Fraction, mpmath.mpf]

_SPLITTER = 134217729.0  # 2**27 + 1


def _split(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Dekker split: a -> (hi, lo), each with <= 27 significant bits."""
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_sum(a, b) -> Tuple[np.ndarray, np.ndarray]:
    """s + err == a + b exactly"""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def two_prod(a, b) -> Tuple[np.ndarray, np.ndarray]:
    """p + err == a * b exactly (no fma in numpy, so Dekker splitting)"""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def split_real(t: RealLike) -> Tuple[float, float]:
    """Represent t as an unevaluated double-double (hi, lo)."""
    if isinstance(t, Fraction):
        hi = float(t)
        return hi, float(t - Fraction(hi))
    if isinstance(t, mpmath.mpf):
        hi = float(t)
        return hi, float(t - mpmath.mpf(hi))
    return float(t), 0.0


def _frac_parts(*parts: np.ndarray) -> np.ndarray:
    total = np.zeros_like(parts[0])
    err = np.zeros_like(parts[0])
    for p in parts:
        r = p - np.rint(p)
        total, e = two_sum(total, r)
        err += e
    return np.mod(total + err, 1.0)


def integer_power_dd(ks: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """k**n as a double-double pair; exact while k**n < 2**106."""
    k = np.asarray(ks, dtype=np.float64)
    hi, lo = k.copy(), np.zeros_like(k)
    for _ in range(n - 1):
        p, e = two_prod(hi, k)
        e = e + lo * k
        hi, lo = two_sum(p, e)
    return hi, lo


def frac_times_power(t: RealLike, ks: np.ndarray, n: int) -> np.ndarray:
    """
    Fractional part of t * k**n for integer k.

    Rationals are reduced exactly in integer arithmetic; everything else goes
    through the double-double path.
    """
    ks = np.asarray(ks)
    if isinstance(t, Fraction):
        u, q = t.numerator, t.denominator
        if q < 2**31:
            r = np.mod(ks.astype(np.int64), q)
            acc = np.ones_like(r)
            for _ in range(n):
                acc = np.mod(acc * r, q)
            return np.mod(acc * (u % q), q) / q
        return np.array([(u * pow(int(k), n, q)) % q / q for k in ks], dtype=np.float64)

    a_hi, a_lo = split_real(t)
    p_hi, p_lo = integer_power_dd(ks, n)
    x1, e1 = two_prod(a_hi, p_hi)
    x2, e2 = two_prod(a_hi, p_lo)
    x3, e3 = two_prod(a_lo, p_hi)
    return _frac_parts(x1, x2, x3, e1 + e2 + e3)


def frac_times_int(x: RealLike, ks: np.ndarray) -> np.ndarray:
    """Fractional part of x * k, broadcasting x against ks."""
    x_hi, x_lo = split_real(x) if not isinstance(x, np.ndarray) else (x, 0.0)
    k = np.asarray(ks, dtype=np.float64)
    p, e = two_prod(x_hi, k)
    return _frac_parts(p, e + np.asarray(x_lo) * k)


def polynomial_phase(coefficients, ks: np.ndarray) -> np.ndarray:
    """Fractional part of sum_j c_j k**j, coefficients given highest degree first."""
    ks = np.asarray(ks)
    degree = len(coefficients) - 1
    total = np.zeros(ks.shape, dtype=np.float64)
    for j, c in enumerate(coefficients):
        power = degree - j
        if power == 0:
            term = np.full(ks.shape, math.fmod(float(c), 1.0))
        else:
            term = frac_times_power(c, ks, power)
        total = total + term
    return np.mod(total, 1.0)


def fsum_complex(values: np.ndarray) -> complex:
    """Correctly rounded sum of a complex vector (math.fsum per component)."""
    values = np.asarray(values)
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def unit_phase(phase: np.ndarray) -> np.ndarray:
    """e(phase) = exp(2 pi i phase) for phases already reduced mod 1."""
    return np.exp(2j * np.pi * phase)
