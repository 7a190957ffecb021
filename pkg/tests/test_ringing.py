import math
from fractions import Fraction
from typing import Tuple

import numpy as np
import pytest

from ringing import (
    EvenRingingProfile,
    OddRingingProfile,
    OddStatementProfile,
    bulk_deviation,
    erf_closed_form,
    fresnel_closed_form,
    gibbs_profile,
    make_profile,
    profile_even,
    profile_odd,
    profile_odd_statement,
    profile_series,
    profile_table,
    renormalized_solution,
)
from ringing.quadrature import IntegralForm, ringing_integral, truncation_radius
from src.dispersive.errors import InvalidInputError, ProfileTableError, QuadratureError


class TestClosedForms:
    def test_fresnel_matches_erf(self):
        ss = np.linspace(-6, 6, 49)
        np.testing.assert_allclose(fresnel_closed_form(ss), erf_closed_form(ss), atol=1e-13)

    def test_conjugate_rotation_shares_real_part(self):
        ss = np.linspace(-3, 3, 13)
        a, b = erf_closed_form(ss), erf_closed_form(ss, conjugate=True)
        np.testing.assert_allclose(a.real, b.real, atol=1e-14)
        np.testing.assert_allclose(a.imag, -b.imag, atol=1e-14)

    def test_center_values(self):
        assert erf_closed_form(0.0) == pytest.approx(0.5)
        assert gibbs_profile(0.0) == pytest.approx(0.5)

    def test_gibbs_overshoot(self):
        """Wilbraham-Gibbs: the truncation profile dips about 9% below zero"""
        assert gibbs_profile(0.5) == pytest.approx(0.5 - 1.851937052 / math.pi, abs=1e-8)


class TestQuadrature:
    @pytest.mark.parametrize("s", [-4.0, -1.0, 0.3, 2.0, 6.5])
    def test_even_n2_matches_closed_form(self, s, constants):
        value = EvenRingingProfile(2).evaluate(s)
        assert value == pytest.approx(complex(erf_closed_form(s)), abs=constants["tolerances"]["profile_n2"])

    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("s", [-3.0, -0.7, 0.0, 1.5])
    def test_matches_power_series(self, n, s, constants):
        value = make_profile(n).evaluate(s)
        assert value == pytest.approx(profile_series(n, s), abs=constants["tolerances"]["series_vs_quadrature"])

    def test_even_at_zero_is_exactly_zero(self):
        res = ringing_integral(4, 0.0, IntegralForm.EVEN)
        assert res.value == 0
        assert res.error == 0

    def test_contour_start_does_not_move_the_value(self):
        a = ringing_integral(3, 1.2, IntegralForm.ODD)
        b = ringing_integral(3, 1.2, IntegralForm.ODD, radius_scale=1.5, refine=2.0)
        assert a.value == pytest.approx(b.value, abs=1e-9)
        assert b.cutoff > a.cutoff

    def test_truncation_radius(self):
        assert truncation_radius(2, 0.0) == 1.0
        assert truncation_radius(2, 9.0) == pytest.approx(10.0)
        assert truncation_radius(3, 0.0, scale=2.0) == 2.0

    @pytest.mark.parametrize("n,s", [(1, 0.5), (3, float("inf"))])
    def test_rejects_bad_arguments(self, n, s):
        with pytest.raises(InvalidInputError):
            ringing_integral(n, s, IntegralForm.ODD)


class TestProfiles:
    def test_odd_center(self, constants):
        assert profile_odd(3, 0.0) == pytest.approx(constants["values"]["odd_center_n3"], abs=1e-9)
        assert profile_odd(5, 0.0) == pytest.approx(0.5 - 1 / 10, abs=1e-9)

    def test_weighted_odd_center(self, constants):
        assert profile_odd_statement(3, 0.0) == pytest.approx(constants["values"]["odd_weighted_center_n3"], abs=1e-9)

    def test_odd_profiles_are_real(self):
        assert make_profile(3).evaluate(0.8).imag == 0.0
        assert OddStatementProfile(3).evaluate(-0.8).imag == 0.0

    def test_side_flips_about_one_half(self):
        for s in (-1.0, 0.4):
            assert profile_even(2, s, side=-1) == pytest.approx(1.0 - profile_even(2, s), abs=1e-9)
            assert profile_odd(3, s, side=-1) == pytest.approx(1.0 - profile_odd(3, s), abs=1e-9)

    def test_far_field_limits(self):
        assert profile_odd(3, 12.0) == pytest.approx(0.0, abs=0.05)
        assert profile_odd(3, -12.0) == pytest.approx(1.0, abs=0.1)

    def test_make_profile_dispatch(self):
        assert isinstance(make_profile(6), EvenRingingProfile)
        assert isinstance(make_profile(7), OddRingingProfile)
        assert isinstance(make_profile(3, form="odd-weighted"), OddStatementProfile)
        with pytest.raises(KeyError):
            make_profile(3, form="cubic")
        with pytest.raises(InvalidInputError):
            make_profile(2, form="odd")

    def test_profile_validation(self):
        with pytest.raises(InvalidInputError):
            EvenRingingProfile(2, side=0)
        with pytest.raises(InvalidInputError):
            OddRingingProfile(4)

    def test_info(self):
        info = make_profile(4, side=-1).info()
        assert info["n"] == 4
        assert info["side"] == -1
        assert info["parity"] == "even"
        assert info["config"]["tol"] == 1e-9


class _FlakyProfile(EvenRingingProfile):
    def evaluate_point(self, s: float) -> Tuple[complex, float]:
        if s > 0:
            raise QuadratureError("forced", 1e-3, s)
        return 0.5 + 0j, 0.0


class TestProfileTable:
    def test_grid(self):
        rows = profile_table(make_profile(2), -1.0, 1.0, 5)
        assert [r.s for r in rows] == [-1.0, -0.5, 0.0, 0.5, 1.0]
        assert rows[2].value == pytest.approx(0.5)

    def test_collects_every_failure(self):
        with pytest.raises(ProfileTableError) as info:
            profile_table(_FlakyProfile(2), -1.0, 1.0, 5)
        assert [s for s, _ in info.value.failures] == [0.5, 1.0]
        assert all(err == 1e-3 for _, err in info.value.failures)

    def test_needs_two_points(self):
        with pytest.raises(InvalidInputError):
            profile_table(make_profile(2), 0.0, 1.0, 1)

    @pytest.mark.parametrize("n", [2, 4])
    def test_even_real_part_mirrors_about_one_half(self, n):
        rows = profile_table(make_profile(n), -4.0, 4.0, 17)
        for left, right in zip(rows, reversed(rows)):
            assert left.s == pytest.approx(-right.s)
            assert left.value.real + right.value.real == pytest.approx(1.0, abs=1e-9)

    def test_sixth_order_stays_bounded(self):
        rows = profile_table(make_profile(6), -6.0, 6.0, 25)
        assert max(abs(r.value) for r in rows) < 1.5

    def test_real_part_crosses_one_half_at_the_jump(self):
        # same grid as the fig7 preset
        rows = profile_table(make_profile(2), -6.0, 6.0, 241)
        mid = len(rows) // 2
        assert rows[mid].s == pytest.approx(0.0, abs=1e-12)
        assert rows[mid].value.real == pytest.approx(0.5, abs=1e-12)
        below, above = rows[mid - 1].value.real - 0.5, rows[mid + 1].value.real - 0.5
        assert below * above < 0


class TestPowerSeries:
    @pytest.mark.parametrize("s", [-5.0, -0.5, 0.0, 2.25, 7.0])
    def test_n2_matches_erf(self, s):
        assert profile_series(2, s) == pytest.approx(complex(erf_closed_form(s)), abs=1e-12)

    def test_odd_center(self):
        assert profile_series(3, 0.0) == pytest.approx(1.0 / 3.0, abs=1e-15)

    def test_radius(self):
        with pytest.raises(InvalidInputError):
            profile_series(2, 12.5)


class TestRenormalized:
    def test_scalar_and_array_agree(self, box, gamma):
        t = Fraction(1, 1025)
        ss = np.array([-1.0, 0.0, 2.0])
        arr = renormalized_solution(box, t, ss, 2, gamma=gamma)
        for s, v in zip(ss, arr):
            assert renormalized_solution(box, t, float(s), 2, gamma=gamma) == pytest.approx(v)

    def test_mirror_symmetry_for_even_order(self, box):
        t = Fraction(1, 513)
        ss = np.linspace(-2, 2, 9)
        left = renormalized_solution(box, t, ss, 2, side=-1)
        right = renormalized_solution(box, t, -ss, 2, side=1)
        np.testing.assert_allclose(left, right, atol=1e-12)

    def test_gamma_inferred_from_indicator(self, box, gamma):
        t = Fraction(1, 257)
        a = renormalized_solution(box, t, 0.5, 3)
        b = renormalized_solution(box, t, 0.5, 3, gamma=gamma)
        assert a == b

    def test_approaches_limit_profile(self, box, gamma):
        ss = np.linspace(-3, 3, 13)
        values = renormalized_solution(box, Fraction(1, 4097), ss, 2, gamma=gamma)
        limit = erf_closed_form(ss)
        assert np.max(np.abs(values - limit)) < 0.15

    def test_irrational_time_uses_partial_sums(self, box):
        value = renormalized_solution(box, 0.01, 0.0, 2)
        assert abs(value - erf_closed_form(0.0)) < 0.2

    def test_bulk_deviation_small_for_small_time(self, box):
        xs = np.linspace(-0.1, 0.1, 21)
        assert bulk_deviation(box, Fraction(1, 4097), xs, 2) < 0.1

    def test_side_validation(self, box):
        with pytest.raises(InvalidInputError):
            renormalized_solution(box, Fraction(1, 9), 0.0, 2, side=2)
