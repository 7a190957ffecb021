"""
Power series of the ringing profiles around s = 0

Expanding the sine (even n) or e(s y) (odd n) and using the regularised
moments int_0^inf y^{a-1} e(y^n) dy = (1/n) Gamma(a/n) (2 pi)^{-a/n} e^{i pi a/(2n)}
gives entire series in s. Terms grow to about exp((pi/2) s^2) for n = 2 (less
for larger n) before they decay, so the sum is done in mpmath at a precision
sized to the largest term.
"""

import logging
import math

import mpmath

from src.dispersive.errors import InvalidInputError

logger = logging.getLogger(__name__)

SERIES_RADIUS = 12.0
MAX_TERMS = 4000
TARGET_DIGITS = 20


def _moment(n: int, a: int):
    """(1/n) Gamma(a/n) (2 pi)^{-a/n} e^{i pi a/(2n)}"""
    return mpmath.gamma(mpmath.mpf(a) / n) * (2 * mpmath.pi) ** (-mpmath.mpf(a) / n) * mpmath.expjpi(mpmath.mpf(a) / (2 * n)) / n


def _log10_peak_term(n: int, s: float) -> float:
    """log10 of max_a (2 pi |s|)^a / a! * |moment(n, a)|, scanned in floats."""
    if s == 0:
        return 0.0
    log_x = math.log(2.0 * math.pi * abs(s))
    log_2pi = math.log(2.0 * math.pi)
    best = -math.inf
    for a in range(1, MAX_TERMS):
        log_term = a * log_x - math.lgamma(a + 1) + math.lgamma(a / n) - (a / n) * log_2pi - math.log(n)
        best = max(best, log_term)
        if log_term < best - 60.0:
            break
    return best / math.log(10.0)


def _working_dps(n: int, s: float) -> int:
    return TARGET_DIGITS + max(0, int(math.ceil(_log10_peak_term(n, s)))) + 5


def _even_integral(n: int, s):
    x = 2 * mpmath.pi * s
    total = mpmath.mpc(0)
    for j in range(MAX_TERMS):
        a = 2 * j + 1
        term = (-1) ** j * x**a / mpmath.factorial(a) * _moment(n, a)
        total += term
        if j > 2 * abs(x) and abs(term) < mpmath.mpf(10) ** (-TARGET_DIGITS - 2):
            return 2 * total
    raise InvalidInputError(f"power series did not converge at s={s}")


def _odd_integral(n: int, s):
    x = 2j * mpmath.pi * s
    total = mpmath.mpc(0)
    for j in range(1, MAX_TERMS):
        term = x**j / mpmath.factorial(j) * _moment(n, j)
        total += term
        if j > 2 * abs(x) and abs(term) < mpmath.mpf(10) ** (-TARGET_DIGITS - 2):
            return 2 * (mpmath.pi / (2 * n) + total.imag)
    raise InvalidInputError(f"power series did not converge at s={s}")


def profile_series(n: int, s: float, side: int = 1) -> complex:
    """Profile value from the power series; |s| above SERIES_RADIUS is refused."""
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if abs(s) > SERIES_RADIUS:
        raise InvalidInputError(f"|s|={abs(s)} beyond the series radius {SERIES_RADIUS}")
    with mpmath.workdps(_working_dps(n, s)):
        sm = mpmath.mpf(s)
        integral = _even_integral(n, sm) if n % 2 == 0 else _odd_integral(n, sm)
        value = mpmath.mpf(0.5) - side * integral / (2 * mpmath.pi)
        return complex(value)
