"""
Oscillatory quadrature for the ringing integrals

    even n:  I(s) = int_R e(y^n) sin(2 pi s y) dy / y
    odd n:   J(s) = int_R sin 2 pi (y^n + s y) dy / y

Both integrands are even in y, so we integrate over [0, inf) and double. The
piece [0, Y] goes to scipy's adaptive Gauss-Kronrod (quad_vec) on the
removable-singularity sinc form, with break points every quarter period of
the fastest local phase. The tail [Y, inf) is moved onto the ray
y = Y + r e^{i pi/(2n)}, where e(y^n +- s y) decays like exp(-2 pi r^n) once
n Y^{n-1} > |s|.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np
from scipy.integrate import quad_vec
from scipy.optimize import brentq

from src.dispersive.errors import InvalidInputError, QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
TAIL_DECAY = 7.0  # exp(-2 pi * 7) ~ 1e-19
MAX_PANELS = 20000


class IntegralForm(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error: float
    head_panels: int
    cutoff: float


def truncation_radius(n: int, s: float, scale: float = 1.0) -> float:
    """Smallest Y with n Y^{n-1} >= 2(|s| + 1), at least 1, times scale."""
    y = max(1.0, (2.0 * (abs(s) + 1.0) / n) ** (1.0 / (n - 1)))
    return y * scale


def _panel_points(lo: float, hi: float, max_rate: float, refine: float) -> np.ndarray:
    width = 1.0 / (4.0 * max_rate * refine)
    count = int(math.ceil((hi - lo) / width))
    if count > MAX_PANELS:
        raise InvalidInputError(f"{count} quadrature panels requested; s is too large for this order")
    return np.linspace(lo, hi, count + 1)[1:-1]


def _as_pair(fn: Callable[[float], complex]) -> Callable[[float], np.ndarray]:
    def pair(y):
        z = fn(y)
        return np.array([z.real, z.imag])

    return pair


def _head_integrand(n: int, s: float, form: IntegralForm) -> Callable[[float], complex]:
    if form is IntegralForm.EVEN:
        # e(y^n) sin(2 pi s y)/y, with sin(2 pi s y)/y = 2 pi s sinc(2 s y)
        return lambda y: np.exp(2j * np.pi * y**n) * (2.0 * np.pi * s) * np.sinc(2.0 * s * y)
    # sin 2 pi (y^n + s y)/y = 2 pi (y^{n-1} + s) sinc(2 (y^n + s y))
    return lambda y: complex((2.0 * np.pi * (y ** (n - 1) + s)) * np.sinc(2.0 * (y**n + s * y)))


def _integrate(fn, lo: float, hi: float, points: np.ndarray, tol: float) -> Tuple[complex, float]:
    res, err = quad_vec(_as_pair(fn), lo, hi, epsabs=tol, epsrel=0.0, points=points, limit=MAX_PANELS)
    return complex(res[0], res[1]), float(err)


def _decay_length(phase: Callable[[float], complex], n: int) -> float:
    """r at which Im(phase) reaches TAIL_DECAY; Im(phase) increases along the ray."""
    r_max = TAIL_DECAY ** (1.0 / n)
    return brentq(lambda r: phase(r).imag - TAIL_DECAY, 0.0, r_max)


def _ray_tail(n: int, sigma_s: float, Y: float, tol: float, refine: float) -> Tuple[complex, float]:
    """int_Y^inf e(y^n + sigma_s y) dy / y along y = Y + r w, w = e^{i pi/(2n)}."""
    w = np.exp(1j * np.pi / (2 * n))

    def phase(r):
        y = Y + r * w
        return y**n + sigma_s * y

    R = _decay_length(phase, n)

    def integrand(r):
        return np.exp(2j * np.pi * phase(r)) * w / (Y + r * w)

    turns = abs(phase(R).real - phase(0.0).real) + TAIL_DECAY
    count = int(math.ceil(4.0 * turns * refine)) + 1
    points = np.linspace(0.0, R, count + 1)[1:-1]
    return _integrate(integrand, 0.0, R, points, tol)


def ringing_integral(
    n: int,
    s: float,
    form: IntegralForm,
    tol: float = DEFAULT_TOL,
    radius_scale: float = 1.0,
    refine: float = 1.0,
) -> QuadratureResult:
    """
    I(s) or J(s) over the whole line. radius_scale moves the contour start Y
    outwards, refine shrinks the panels; both exist for self-consistency checks.
    """
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if not math.isfinite(s):
        raise InvalidInputError("s must be finite")
    if s == 0.0 and form is IntegralForm.EVEN:
        return QuadratureResult(0j, 0.0, 0, 0.0)

    Y = truncation_radius(n, s, radius_scale)
    points = _panel_points(0.0, Y, n * Y ** (n - 1) + abs(s), refine)
    head, head_err = _integrate(_head_integrand(n, s, form), 0.0, Y, points, tol / 4)

    if form is IntegralForm.EVEN:
        t_plus, e_plus = _ray_tail(n, s, Y, tol / 4, refine)
        t_minus, e_minus = _ray_tail(n, -s, Y, tol / 4, refine)
        value = 2.0 * head + (t_plus - t_minus) / 1j
        error = 2.0 * head_err + e_plus + e_minus
    else:
        t_plus, e_plus = _ray_tail(n, s, Y, tol / 4, refine)
        value = complex(2.0 * head.real + 2.0 * t_plus.imag, 0.0)
        error = 2.0 * (head_err + e_plus)

    if error > tol:
        raise QuadratureError(f"ringing integral n={n} s={s:g} did not converge", error, s)
    logger.debug("ringing_integral n=%d s=%g Y=%.3g panels=%d err=%.2e", n, s, Y, points.size + 1, error)
    return QuadratureResult(value, error, points.size + 1, Y)
