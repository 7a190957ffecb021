"""
Ringing profiles - limit shapes of the solution near a jump as t -> 0
"""

from typing import Dict, Type

from ringing.base_profile import Parity, ProfilePoint, RingingProfile, profile_table
from ringing.even_profile import EvenRingingProfile, erf_closed_form, fresnel_closed_form, gibbs_profile
from ringing.odd_profile import OddRingingProfile, OddStatementProfile
from ringing.power_series import profile_series
from ringing.renormalized import bulk_deviation, renormalized_solution

PROFILE_FORMS: Dict[str, Type[RingingProfile]] = {
    "even": EvenRingingProfile,
    "odd": OddRingingProfile,
    "odd-weighted": OddStatementProfile,
}


def make_profile(n: int, side: int = 1, form: str = "auto") -> RingingProfile:
    """Profile object for order n; form 'auto' picks by parity."""
    if form == "auto":
        form = "even" if n % 2 == 0 else "odd"
    try:
        cls = PROFILE_FORMS[form]
    except KeyError:
        raise KeyError(f"unknown profile form '{form}'") from None
    return cls(n=n, side=side)


def profile_even(n: int, s: float, side: int = 1) -> complex:
    return EvenRingingProfile(n, side).evaluate(s)


def profile_odd(n: int, s: float, side: int = 1) -> float:
    return OddRingingProfile(n, side).evaluate(s).real


def profile_odd_statement(n: int, s: float, side: int = 1) -> float:
    return OddStatementProfile(n, side).evaluate(s).real


__all__ = [
    "Parity",
    "ProfilePoint",
    "RingingProfile",
    "EvenRingingProfile",
    "OddRingingProfile",
    "OddStatementProfile",
    "PROFILE_FORMS",
    "make_profile",
    "profile_even",
    "profile_odd",
    "profile_odd_statement",
    "profile_table",
    "profile_series",
    "erf_closed_form",
    "fresnel_closed_form",
    "gibbs_profile",
    "renormalized_solution",
    "bulk_deviation",
]
