"""
Even-order ringing profile and its closed forms

    P(s) = 1/2 - side * (1/2 pi) int_R e(y^n) sin(2 pi s y) dy / y

For n = 2 the integral has the closed form (1/2) Erf(sqrt(pi/2) e^{i pi/4} s)
with e(x) = exp(2 pi i x); the e^{-i pi/4} variant is its complex conjugate
and has the same real part.
"""

import math
from typing import Tuple

import numpy as np
from scipy import special

from ringing.base_profile import Parity, RingingProfile
from ringing.quadrature import IntegralForm, ringing_integral

_ROOT_HALF_PI = math.sqrt(math.pi / 2.0)


class EvenRingingProfile(RingingProfile):
    parity = Parity.EVEN

    def __init__(self, n: int = 2, side: int = 1):
        super().__init__(
            n=n,
            side=side,
            name=f"Even Ringing n={n}",
            description="Dispersive overshoot at a jump for even-order dispersion",
            version="1.0",
        )

    def evaluate_point(self, s: float) -> Tuple[complex, float]:
        res = ringing_integral(self.n, s, IntegralForm.EVEN, tol=self.config["tol"])
        return 0.5 - self.side * res.value / (2.0 * math.pi), res.error / (2.0 * math.pi)


def erf_closed_form(s, side: int = 1, conjugate: bool = False):
    """
    1/2 - side (1/2) Erf(sqrt(pi/2) e^{+-i pi/4} s); conjugate=True picks the
    e^{-i pi/4} rotation.
    """
    rot = np.exp((-1j if conjugate else 1j) * np.pi / 4)
    return 0.5 - side * 0.5 * special.erf(_ROOT_HALF_PI * rot * np.asarray(s, dtype=np.float64))


def fresnel_closed_form(s, side: int = 1):
    """The same profile via Fresnel integrals: (1/2) Erf = (1+i)/2 (C(s) - i S(s))."""
    S, C = special.fresnel(np.asarray(s, dtype=np.float64))
    return 0.5 - side * 0.5 * (1 + 1j) * (C - 1j * S)


def gibbs_profile(s):
    """Truncation (Gibbs) ringing limit 1/2 - Si(2 pi s)/pi, for contrast."""
    si, _ = special.sici(2.0 * np.pi * np.asarray(s, dtype=np.float64))
    return 0.5 - si / np.pi
