from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from src.dispersive.errors import InvalidInputError, ProfileTableError, QuadratureError


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass
class ProfilePoint:
    s: float
    value: complex
    error: float


class RingingProfile:
    """
    Limit shape of U(t, side*gamma + s t^{1/n}) as t -> 0.

    Subclasses implement evaluate_point(s) -> (value, error estimate).
    """

    parity: Parity = Parity.EVEN

    def __init__(self, n: int, side: int, name: str, description: str, version: str):
        if n < 2:
            raise InvalidInputError("n must be >= 2")
        if side not in (1, -1):
            raise InvalidInputError("side must be +1 or -1")
        expected = Parity.EVEN if n % 2 == 0 else Parity.ODD
        if expected is not self.parity:
            raise InvalidInputError(f"{type(self).__name__} needs {self.parity.value} n, got n={n}")
        self.n = n
        self.side = side
        self.name = name
        self.description = description
        self.version = version
        self.config: Dict = {"tol": 1e-9}

    def evaluate_point(self, s: float) -> Tuple[complex, float]:
        raise NotImplementedError

    def evaluate(self, s: float) -> complex:
        return self.evaluate_point(float(s))[0]

    def __call__(self, s: float) -> complex:
        return self.evaluate(s)

    def info(self) -> Dict:
        return {
            "name": self.name,
            "description": self.description,
            "version": self.version,
            "n": self.n,
            "side": self.side,
            "parity": self.parity.value,
            "config": dict(self.config),
        }


def profile_table(profile: RingingProfile, s_lo: float, s_hi: float, count: int) -> List[ProfilePoint]:
    """
    Uniform s-grid evaluation. Every point is attempted; failures are collected
    and raised together.
    """
    if count < 2:
        raise InvalidInputError("count must be >= 2")
    rows: List[ProfilePoint] = []
    failures = []
    for s in np.linspace(s_lo, s_hi, count):
        try:
            value, err = profile.evaluate_point(float(s))
            rows.append(ProfilePoint(float(s), value, err))
        except QuadratureError as exc:
            failures.append((float(s), exc.achieved))
    if failures:
        raise ProfileTableError(failures)
    return rows
