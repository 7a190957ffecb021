"""
Error hierarchy shared by the solver, number-theory and ringing packages
"""

from typing import List, Optional, Tuple


class TalbotError(Exception):
    """Base class for every error raised by this project"""


class InvalidInputError(TalbotError, ValueError):
    """A precondition on an argument was violated"""


class QuadratureError(TalbotError, RuntimeError):
    """Oscillatory quadrature failed to reach the requested tolerance"""

    def __init__(self, message: str, achieved: float, s: Optional[float] = None):
        super().__init__(f"{message} (achieved error {achieved:.3e})")
        self.achieved = achieved
        self.s = s


class ProfileTableError(TalbotError, RuntimeError):
    """One or more points of a profile table failed"""

    def __init__(self, failures: List[Tuple[float, float]]):
        points = ", ".join(f"s={s:.6g} (err {err:.2e})" for s, err in failures)
        super().__init__(f"quadrature failed at {len(failures)} point(s): {points}")
        self.failures = failures


class SuiteFailure(TalbotError):
    """A verification suite found an invariant violation"""


class EmitError(TalbotError, OSError):
    """Writing an output artifact failed"""
