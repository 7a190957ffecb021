import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from number_theory.expsum import IntPoly
from src.dispersive.classd import evaluate, fourier_coeffs
from src.dispersive.errors import InvalidInputError
from src.dispersive.rational import solve_rational
from src.dispersive.series import (
    SmoothCutoff,
    cauchy_profile,
    grid_partial_sum,
    partial_sum_S,
    smoothed_solution_U_star,
    solution_partial_sum,
    tail_split,
)


class TestPartialSums:
    def test_zero_terms_is_the_mean(self, box, gamma):
        assert solution_partial_sum(box, 0.3, 0.1, 0, 2) == pytest.approx(2 * gamma)

    def test_time_zero_matches_direct_fourier_sum(self, box):
        K = 50
        x = 0.123
        ks = np.arange(-K, K + 1)
        direct = np.sum(fourier_coeffs(box, ks) * np.exp(2j * np.pi * ks * x))
        assert solution_partial_sum(box, 0.0, x, K, 2) == pytest.approx(direct, abs=1e-12)

    def test_matches_naive_sum_for_small_K(self, box):
        t, x, K, n = 0.2718281828, -0.31, 40, 3
        ks = np.arange(-K, K + 1)
        naive = np.sum(fourier_coeffs(box, ks) * np.exp(2j * np.pi * (t * ks.astype(float) ** n + x * ks)))
        assert solution_partial_sum(box, t, x, K, n) == pytest.approx(naive, abs=1e-10)

    def test_grid_matches_pointwise(self, box):
        xs = np.array([-0.4, 0.0, 0.25])
        grid = grid_partial_sum(box, Fraction(1, 5), xs, 3000, 2)
        for x, v in zip(xs, grid.values):
            assert v == pytest.approx(solution_partial_sum(box, Fraction(1, 5), x, 3000, 2), abs=1e-10)
        assert grid.metadata["K"] == "3000"

    def test_negative_K_rejected(self, box):
        with pytest.raises(InvalidInputError):
            solution_partial_sum(box, 0.1, 0.0, -1, 2)

    def test_sawtooth_at_time_zero(self):
        """sum_{0<|k|<=K} e(kx)/k = 2i sum sin(2 pi k x)/k -> i pi (1 - 2x) on (0, 1)"""
        value = partial_sum_S(0.0, 0.25, 20000, 2)
        assert value.real == pytest.approx(0.0, abs=1e-12)
        assert value.imag == pytest.approx(math.pi * 0.5, abs=1e-3)

    def test_S_needs_a_term(self):
        with pytest.raises(InvalidInputError):
            partial_sum_S(0.1, 0.0, 0)


class TestCauchyProfile:
    def test_differences_shrink_for_badly_approximable_time(self):
        with mpmath.workdps(40):
            t = mpmath.sqrt(2) - 1
        Ks = [256, 512, 1024, 2048, 4096]
        diffs = cauchy_profile(t, None, Ks, 2)
        assert len(diffs) == len(Ks) - 1
        assert diffs[-1] < diffs[0]

    def test_repeated_K_gives_zero(self):
        assert cauchy_profile(0.3, [0.1], [100, 100], 2) == [0.0]

    def test_Ks_must_be_sorted(self):
        with pytest.raises(InvalidInputError):
            cauchy_profile(0.3, None, [200, 100], 2)


class TestSmoothCutoff:
    def test_partition_of_unity(self):
        phi = SmoothCutoff()
        xs = np.linspace(0.3, 3.0, 50)
        np.testing.assert_allclose(phi(xs) + phi(1.0 / xs), 1.0, atol=1e-15)

    def test_support(self):
        phi = SmoothCutoff()
        assert phi(0.4) == 1.0
        assert phi(2.5) == 0.0
        assert phi(1.0) == pytest.approx(0.5)
        assert phi.complement(0.4) == 0.0


class TestTailSplit:
    def test_pieces_add_up_to_partial_sum(self, box):
        t, x, n, alpha = 0.001, 0.05, 2, 0.8
        K = 4000
        u_star, large = tail_split(box, t, x, n, alpha, K)
        assert u_star + large == pytest.approx(solution_partial_sum(box, t, x, K, n), abs=1e-10)

    def test_U_star_is_smooth_approximation(self, box):
        value = smoothed_solution_U_star(box, 1e-4, 0.0, 2, 0.8)
        assert abs(value - evaluate(box, 0.0)) < 0.1

    def test_K_must_cover_cutoff(self, box):
        with pytest.raises(InvalidInputError):
            tail_split(box, 0.001, 0.0, 2, 0.8, 10)

    def test_nonpositive_time_rejected(self, box):
        with pytest.raises(InvalidInputError):
            smoothed_solution_U_star(box, 0.0, 0.0, 2, 0.8)

    def test_cutoff_below_first_mode_keeps_the_mean(self, box, gamma):
        # t^-alpha < 1/2 leaves no k with phi(k t^alpha) > 0
        assert smoothed_solution_U_star(box, 4.0, 0.0, 2, 0.55) == pytest.approx(2 * gamma)

    @staticmethod
    def _rational_gap(f, q):
        exact = evaluate(solve_rational(f, Fraction(1, q), IntPoly.monomial(2)).field, 0.0)
        return abs(exact - smoothed_solution_U_star(f, Fraction(1, q), 0.0, 2, 0.55))

    def test_U_star_close_to_exact_solution(self, box):
        assert self._rational_gap(box, 2049) <= 0.05

    def test_U_star_gap_shrinks_with_q(self, box):
        gaps = [self._rational_gap(box, q) for q in (129, 513, 2049)]
        assert gaps[0] > gaps[1] > gaps[2]
