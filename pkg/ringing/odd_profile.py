"""
Odd-order ringing profiles

The limit shape is real:

    P(s) = 1/2 - side * (1/2 pi) int_R sin 2 pi (y^n + s y) dy / y

and is not symmetric about (0, 1/2): P(0) = 1/2 - side/(2n).

A second variant carries an extra e(y^n) factor inside the integral,
int_R e(y^n) sin 2 pi (y^n + s y) dy / y. Splitting the sine and rescaling
y -> 2^{-1/n} y reduces it to the real number J(2^{-1/n} s)/2 + (pi/2) sgn(s),
with J the integral above. It is kept for comparison only; the renormalized
solution follows the first form.
"""

import math
from typing import Tuple

from ringing.base_profile import Parity, RingingProfile
from ringing.quadrature import IntegralForm, ringing_integral


class OddRingingProfile(RingingProfile):
    parity = Parity.ODD

    def __init__(self, n: int = 3, side: int = 1):
        super().__init__(
            n=n,
            side=side,
            name=f"Odd Ringing n={n}",
            description="Asymmetric real overshoot at a jump for odd-order dispersion",
            version="1.0",
        )

    def evaluate_point(self, s: float) -> Tuple[complex, float]:
        res = ringing_integral(self.n, s, IntegralForm.ODD, tol=self.config["tol"])
        return complex(0.5 - self.side * res.value.real / (2.0 * math.pi)), res.error / (2.0 * math.pi)


class OddStatementProfile(OddRingingProfile):
    """The e(y^n)-weighted variant described in the module docstring."""

    def __init__(self, n: int = 3, side: int = 1):
        super().__init__(n=n, side=side)
        self.name = f"Odd Ringing (weighted) n={n}"
        self.description = "Odd-order profile with the extra e(y^n) factor, for comparison"

    def evaluate_point(self, s: float) -> Tuple[complex, float]:
        res = ringing_integral(self.n, s * 2.0 ** (-1.0 / self.n), IntegralForm.ODD, tol=self.config["tol"])
        sgn = math.copysign(1.0, s) if s != 0 else 0.0
        integral = 0.5 * res.value.real + 0.5 * math.pi * sgn
        return complex(0.5 - self.side * integral / (2.0 * math.pi)), res.error / (4.0 * math.pi)
