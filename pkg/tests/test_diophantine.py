from fractions import Fraction

import mpmath
import pytest
from pydantic import ValidationError

from number_theory.diophantine import (
    ApproximantTable,
    DiophantineParams,
    admissible_rational,
    approximation_gap,
    continued_fraction,
    convergents,
    find_approximant,
    fit_measure_constant,
    in_set_A_m,
    in_set_B,
    intermediate_fractions,
    measure_estimate,
    measure_lower_bound,
    parse_time,
    time_fraction,
)
from src.dispersive.errors import InvalidInputError


class TestParams:
    def test_default_alpha_is_window_midpoint(self):
        p = DiophantineParams(n=2, delta=0.4)
        assert p.effective_alpha == pytest.approx(0.5 * (1 / 1.6 + 1.0))
        assert p.alpha_in_theorem_window

    def test_delta_range_depends_on_order(self):
        with pytest.raises(ValidationError):
            DiophantineParams(n=2, delta=0.5)
        assert DiophantineParams(n=3, delta=0.6).delta == 0.6

    @pytest.mark.parametrize("kwargs", [{"n": 1}, {"m": 1}, {"alpha": 0.0}, {"delta": 0.0}])
    def test_rejects_out_of_range(self, kwargs):
        with pytest.raises(ValidationError):
            DiophantineParams(**kwargs)

    def test_alpha_outside_window_is_accepted(self):
        p = DiophantineParams(n=2, delta=0.4, alpha=0.55)
        assert not p.alpha_in_theorem_window
        assert p.effective_alpha == 0.55

    def test_window(self):
        lo, hi = DiophantineParams(n=2, delta=0.4).window(4.0)
        assert lo == pytest.approx(4**0.4)
        assert hi == pytest.approx(4**1.6)


class TestTimes:
    def test_parse_rational(self):
        assert parse_time("6/14") == Fraction(3, 7)

    def test_parse_real_keeps_extra_digits(self, constants):
        t = parse_time(constants["values"]["silver"])
        assert isinstance(t, mpmath.mpf)
        with mpmath.workdps(40):
            assert abs(t - (mpmath.sqrt(2) - 1)) < mpmath.mpf(10) ** -35

    @pytest.mark.parametrize("u,q", [(-1, 5), (6, 5), (1, 0)])
    def test_time_fraction_bounds(self, u, q):
        with pytest.raises(InvalidInputError):
            time_fraction(u, q)


class TestContinuedFractions:
    def test_rational_terminates(self):
        assert continued_fraction(Fraction(13, 30)) == [0, 2, 3, 4]

    def test_golden_mean(self, constants):
        terms = continued_fraction(constants["values"]["golden"], max_terms=30)
        assert len(terms) == 30
        assert terms[1:] == [1] * 29

    def test_silver_mean_from_double(self):
        terms = continued_fraction(2**0.5 - 1, max_terms=12)
        assert terms[1:] == [2] * (len(terms) - 1)

    def test_convergents(self):
        golden = (5**0.5 - 1) / 2
        assert convergents(golden, 8) == [
            Fraction(0),
            Fraction(1),
            Fraction(1, 2),
            Fraction(2, 3),
            Fraction(3, 5),
            Fraction(5, 8),
            Fraction(8, 13),
            Fraction(13, 21),
        ]

    def test_convergents_are_approximants(self, constants):
        t = constants["values"]["silver"]
        for c in convergents(t, 15)[1:]:
            assert approximation_gap(t, c) < 1.0

    def test_intermediate_fractions(self):
        # 1/(2 + 1/4): between 0/1 and 1/2 the intermediates are (0 + k)/(1 + 2k), k < 4
        assert intermediate_fractions(Fraction(4, 9), 1) == [Fraction(1, 3), Fraction(2, 5), Fraction(3, 7)]

    def test_rejects_outside_unit_interval(self):
        with pytest.raises(InvalidInputError):
            continued_fraction(1.5)


class TestApproximants:
    def test_table_includes_first_gap(self):
        table = ApproximantTable(Fraction(1, 7), 10)
        assert Fraction(1, 6) in table.fractions
        assert Fraction(1, 7) in table.fractions

    def test_golden_mean_window(self):
        golden = (5**0.5 - 1) / 2
        frac = find_approximant(golden, 4.0, DiophantineParams(n=2, delta=0.4))
        assert frac == Fraction(5, 8)

    def test_empty_window_returns_none(self):
        params = DiophantineParams(n=2, delta=0.4)
        assert find_approximant(Fraction(1, 7), 400.0, params) is None

    def test_rejects_small_M(self):
        with pytest.raises(InvalidInputError):
            find_approximant(0.3, 1.5, DiophantineParams())

    def test_rational_times_drop_out_of_A(self):
        params = DiophantineParams(n=2, delta=0.4)
        assert not in_set_A_m(Fraction(1, 7), params, M_max=200)

    def test_golden_mean_is_in_A(self, constants):
        params = DiophantineParams(n=2, delta=0.4)
        assert in_set_A_m(constants["values"]["golden"], params, M_max=300)

    def test_B_horizon_empty_is_vacuous(self):
        params = DiophantineParams(n=2, delta=0.4)
        assert in_set_B(0.001, params, M_max=2.5)

    def test_silver_mean_is_in_B(self, constants):
        params = DiophantineParams(n=2, delta=0.4, alpha=0.55, m=2)
        assert in_set_B(constants["values"]["silver"], params, M_max=1000)

    def test_huge_partial_quotient_leaves_both_sets(self):
        # [0; 2, 10^6, 2, 2, ...]: nothing between q = 2 and q ~ 2 * 10^6
        with mpmath.workdps(40):
            t = 1 / (2 + 1 / (10**6 + mpmath.sqrt(2) - 1))
        assert continued_fraction(t, max_terms=4) == [0, 2, 10**6, 2]
        params = DiophantineParams(n=2, delta=0.4, m=2)
        assert not in_set_A_m(t, params, M_max=1000)
        assert not in_set_B(t, params, M_max=1000)

    def test_membership_grows_with_m(self, rng):
        for t in rng.uniform(0.001, 0.999, size=60):
            flags = [in_set_A_m(float(t), DiophantineParams(n=3, delta=0.5, m=m), M_max=200) for m in (2, 8, 32)]
            assert flags == sorted(flags), f"t={t}: {flags}"

    def test_A_is_contained_in_B(self, rng):
        for m in (2, 8):
            params = DiophantineParams(n=3, delta=0.5, m=m)
            for t in rng.uniform(0.001, 0.999, size=60):
                if in_set_A_m(float(t), params, M_max=200):
                    assert in_set_B(float(t), params, M_max=200), f"t={t}, m={m}"

    def test_horizon_below_m(self):
        with pytest.raises(InvalidInputError):
            in_set_A_m(0.3, DiophantineParams(m=8), M_max=4)


class TestMeasure:
    def test_estimate_is_reproducible(self):
        params = DiophantineParams(n=3, delta=0.5, m=8)
        a = measure_estimate(params, 1.0, 40, 100.0, seed=3, use_alpha=False)
        b = measure_estimate(params, 1.0, 40, 100.0, seed=3, use_alpha=False)
        assert a == b
        assert 0.0 <= a <= 1.0

    def test_estimate_needs_samples(self):
        with pytest.raises(InvalidInputError):
            measure_estimate(DiophantineParams(), samples=0)

    def test_lower_bound_round_trip(self):
        params = DiophantineParams(n=3, delta=0.5, m=8)
        c = fit_measure_constant(params, 0.9)
        assert measure_lower_bound(params, c) == pytest.approx(0.9)

    @pytest.mark.slow
    def test_constant_fitted_at_m2_bounds_m4(self):
        coarse = DiophantineParams(n=3, delta=0.5, m=2)
        fine = DiophantineParams(n=3, delta=0.5, m=4)
        est2 = measure_estimate(coarse, 1.0, 1000, 500.0, seed=0, use_alpha=False)
        c = fit_measure_constant(coarse, est2)
        est4 = measure_estimate(fine, 1.0, 1000, 500.0, seed=0, use_alpha=False)
        assert est4 >= measure_lower_bound(fine, c)

    def test_admissible_rational(self):
        params = DiophantineParams(n=2, delta=0.4)
        assert admissible_rational(Fraction(1, 7), params)
        assert not admissible_rational(Fraction(6, 7), params)
