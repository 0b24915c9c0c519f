"""Tests for the exact identity checks and the floating zero machinery."""

import cmath
import math
from fractions import Fraction

import pytest

from congruential_euler.analytic import (
    BernoulliFormulaId,
    PiPolynomial,
    ZetaFormulaId,
    bernoulli,
    bernoulli_formula_value,
    check_bernoulli_identity,
    check_special_values,
    check_zeta_identity,
    eval_H,
    extraneous_zeros,
    family_zeros,
    formula_value,
    lambda_even,
    locate_zero,
    predicted_zero,
    ratio_radius,
    zeta_even,
)
from congruential_euler.engine import SeqParams


class TestBernoulli:
    def test_first_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_values_vanish(self):
        assert all(bernoulli(n) == 0 for n in (3, 5, 7, 9, 11))


class TestZetaLambda:
    def test_zeta_values(self):
        assert zeta_even(2) == PiPolynomial(2, Fraction(1, 6))
        assert zeta_even(4) == PiPolynomial(4, Fraction(1, 90))
        assert zeta_even(6) == PiPolynomial(6, Fraction(1, 945))

    def test_lambda_values(self):
        assert lambda_even(2) == PiPolynomial(2, Fraction(1, 8))
        assert lambda_even(4) == PiPolynomial(4, Fraction(1, 96))

    def test_reject_odd(self):
        with pytest.raises(ValueError):
            zeta_even(3)
        with pytest.raises(ValueError):
            lambda_even(5)

    def test_pi_polynomial_validation(self):
        with pytest.raises(ValueError):
            PiPolynomial(3, Fraction(1))
        with pytest.raises(ValueError):
            PiPolynomial(0, Fraction(1))

    def test_float_value(self):
        assert math.isclose(float(zeta_even(2)), math.pi**2 / 6)


class TestZetaDisplays:
    def test_spot_value_via_42(self):
        value = formula_value(ZetaFormulaId.zeta_4n_via_42, 1)
        assert value == PiPolynomial(4, Fraction(1, 90))

    def test_spot_value_lambda_via_40(self):
        value = formula_value(ZetaFormulaId.lambda_4n_via_40, 1)
        assert value == PiPolynomial(4, Fraction(1, 96))

    def test_spot_value_via_63(self):
        value = formula_value(ZetaFormulaId.zeta_6n_via_63, 1)
        assert value == PiPolynomial(6, Fraction(1, 945))

    @pytest.mark.parametrize("formula", list(ZetaFormulaId))
    def test_identities_to_n3(self, formula):
        for n in range(1, 4):
            assert check_zeta_identity(formula, n)

    def test_cross_formula_consistency(self):
        for n in range(1, 4):
            assert formula_value(ZetaFormulaId.zeta_4n_via_40, n) == formula_value(
                ZetaFormulaId.zeta_4n_via_42, n
            )

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            formula_value(ZetaFormulaId.zeta_4n_via_40, 0)


class TestBernoulliDisplays:
    def test_b0_lines_at_n0(self):
        assert bernoulli_formula_value(BernoulliFormulaId.b4n_via_42, 0) == 1
        assert bernoulli_formula_value(BernoulliFormulaId.b6n_via_63, 0) == 1

    def test_b4_via_42(self):
        assert bernoulli_formula_value(BernoulliFormulaId.b4n_via_42, 1) == Fraction(-1, 30)

    @pytest.mark.parametrize("formula", list(BernoulliFormulaId))
    def test_identities_to_n3(self, formula):
        start = 0 if formula in (BernoulliFormulaId.b4n_via_42, BernoulliFormulaId.b6n_via_63) else 1
        for n in range(start, 4):
            assert check_bernoulli_identity(formula, n)

    def test_range_validation(self):
        with pytest.raises(ValueError, match="at least 1"):
            bernoulli_formula_value(BernoulliFormulaId.b4n_via_40, 0)


class TestEvalH:
    def test_value_at_origin(self):
        assert abs(eval_H(2, 0, 0) - 1) < 1e-15
        assert abs(eval_H(6, 3, 0)) < 1e-15

    def test_cosh(self):
        z = 0.7 + 0.3j
        assert abs(eval_H(2, 0, z) - cmath.cosh(z)) < 1e-12

    def test_first_zero_of_40(self):
        z = predicted_zero((4, 0), 1, 0)
        assert z == (1 + 1j) * math.pi / 2
        assert abs(eval_H(4, 0, z)) < 1e-9

    def test_quadratic_leading_term(self):
        for x in (0.01, 0.02):
            assert abs(eval_H(4, 2, x) - x**2 / 2) < x**3

    def test_rejects_bad_offset(self):
        with pytest.raises(ValueError):
            eval_H(4, 4, 0)

    def test_rejects_huge_argument(self):
        with pytest.raises(ValueError):
            eval_H(2, 0, 800)


class TestZeros:
    def test_newton_from_second_zero_guess(self):
        target = predicted_zero((4, 0), 2, 0)
        z = locate_zero(4, 0, target + 0.05 + 0.02j)
        assert abs(z - target) < 1e-9

    def test_newton_63_family(self):
        target = predicted_zero((6, 3), 1, 0)
        z = locate_zero(6, 3, target + 0.1)
        assert abs(z - target) < 1e-9

    def test_trivial_zero_of_42(self):
        z = locate_zero(4, 2, 0.1, tol=1e-13)
        assert abs(z) < 1e-6  # converges to the trivial zero at the origin

    def test_family_zeros_ordering(self):
        zeros = family_zeros((4, 0), 6)
        assert [(k, l) for k, l, _ in zeros] == [(1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)]
        moduli = [abs(z) for _, _, z in zeros]
        assert moduli == sorted(moduli)
        assert abs(moduli[0] - math.sqrt(2) * math.pi / 2) < 1e-12

    def test_all_predicted_zeros_vanish(self):
        for family in ((4, 0), (4, 2), (6, 3)):
            N, j = family
            for k in (1, 2):
                for l in range(N):
                    z = predicted_zero(family, k, l)
                    scale = max(1.0, abs(cmath.exp(abs(z))))
                    assert abs(eval_H(N, j, z)) / scale < 1e-12

    def test_non_convergence_raises(self):
        with pytest.raises(ArithmeticError):
            locate_zero(4, 0, 100 + 100j, max_steps=2)


class TestSpecialValues:
    def test_ratio_is_minus_i(self):
        z = predicted_zero((4, 0), 1, 0)
        ratio = eval_H(4, 1, z) / eval_H(4, 3, z)
        assert abs(ratio - (-1j)) < 1e-10

    def test_explicit_63_value(self):
        z = predicted_zero((6, 3), 1, 1)
        expected = (1 + math.cosh(math.sqrt(3) * math.pi)) / 3
        assert abs(eval_H(6, 2, z) - expected) < 1e-8 * expected
        assert abs(eval_H(6, 4, z) - expected) < 1e-8 * expected

    def test_check_function(self):
        assert check_special_values(1, 0)
        assert check_special_values(1, 1)
        assert check_special_values(2, 3)
        assert check_special_values(1, 5)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            check_special_values(0, 0)
        with pytest.raises(ValueError):
            check_special_values(1, 6)
        with pytest.raises(ValueError):
            check_special_values(10**6, 0)


class TestGridSearch:
    def test_42_family_small_disk(self):
        stray = extraneous_zeros((4, 2), 1.5 * math.pi)
        assert stray == []


class TestRatioRadius:
    def test_classical_sech(self):
        estimate = ratio_radius(SeqParams(2, 0), 30)
        assert abs(estimate - 0.5) < 0.005

    def test_sqrt2_family(self):
        estimate = ratio_radius(SeqParams(4, 2), 30)
        assert abs(estimate - math.sqrt(2)) < 0.014

    def test_rejects_small_window(self):
        with pytest.raises(ValueError):
            ratio_radius(SeqParams(2, 0), 5)
