import random
from fractions import Fraction

import pytest

from ladderpoly.algebra import (
    ONE,
    Polynomial,
    RationalFunction,
    X,
    ZERO,
    as_rational_function,
    integrate_rational,
)
from ladderpoly.weighted import (
    NotPolynomialError,
    PowerFactor,
    WeightedExpression,
    exp_integral,
)

X_SQ_MINUS_1 = Polynomial.of(-1, 0, 1)
HALF = Fraction(1, 2)


def w_poly(p):
    return WeightedExpression.from_polynomial(p)


def sqrt_x2m1():
    return WeightedExpression.power(1, HALF) * WeightedExpression.power(-1, HALF)


class TestNormalization:
    def test_integer_exponent_folds_into_coeff(self):
        w = WeightedExpression(RationalFunction(ONE), ((Fraction(1), Fraction(3)),))
        assert w.powers == ()
        assert w.coeff == as_rational_function((X - 1) ** 3)

    def test_split_integer_part(self):
        w = WeightedExpression(RationalFunction(ONE), ((Fraction(1), Fraction(5, 2)),))
        assert w.powers == (PowerFactor(Fraction(1), HALF),)
        assert w.coeff == as_rational_function((X - 1) ** 2)

    def test_negative_exponent_keeps_fraction_in_unit_interval(self):
        w = WeightedExpression.power(1, Fraction(-1, 2))
        assert w.powers == (PowerFactor(Fraction(1), HALF),)
        assert w.coeff == RationalFunction(ONE, X - 1)

    def test_distinct_roots_kept_sorted(self):
        w = sqrt_x2m1()
        assert [pf.root for pf in w.powers] == [Fraction(-1), Fraction(1)]
        assert all(pf.exponent == HALF for pf in w.powers)

    def test_exp_constant_term_dropped(self):
        w = WeightedExpression.exp_of(Polynomial.of(7, 0, 1))
        assert w.exp_arg == Polynomial.of(0, 0, 1)

    def test_zero_collapses(self):
        w = WeightedExpression(RationalFunction(ZERO), ((Fraction(1), HALF),), X)
        assert w.is_zero
        assert w.powers == () and w.exp_arg == ZERO

    def test_merging_same_root(self):
        w = WeightedExpression(
            RationalFunction(ONE), ((Fraction(1), HALF), (Fraction(1), HALF))
        )
        assert w.powers == ()
        assert w.coeff == as_rational_function(X - 1)


class TestDifferentiation:
    def test_gaussian_chain_rule(self):
        gauss = WeightedExpression.exp_of(X * X * Fraction(-1, 2))
        assert gauss.diff() == w_poly(-X) * gauss

    def test_sqrt_product_rule_checked_by_squaring(self):
        q = sqrt_x2m1()
        derivative = q.diff()
        # d/dx sqrt(x^2-1) = x / sqrt(x^2-1); square both sides to stay rational
        assert derivative * derivative == w_poly(X * X) / w_poly(X_SQ_MINUS_1)
        # and directly: derivative * q == x
        assert derivative * q == w_poly(X)

    def test_folded_polynomial(self):
        assert w_poly(X_SQ_MINUS_1).diff() == w_poly(X * 2)

    def test_product_rule_random(self):
        rng = random.Random(3)
        roots = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2)]
        for _ in range(30):
            u = _random_weighted(rng, roots)
            v = _random_weighted(rng, roots)
            assert (u * v).diff() == u.diff() * v + u * v.diff()


def _random_weighted(rng, roots):
    coeff_num = Polynomial(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))))
    if coeff_num.is_zero:
        coeff_num = ONE
    picked = rng.sample(roots, rng.randint(0, 3))
    powers = tuple((root, Fraction(rng.randint(1, 5), rng.choice([2, 3]))) for root in picked)
    exp_arg = Polynomial(tuple(Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 4))))
    return WeightedExpression(RationalFunction(coeff_num), powers, exp_arg)


class TestMulDiv:
    def test_exponent_subtraction(self):
        q = sqrt_x2m1()
        assert w_poly(X_SQ_MINUS_1) / q == q

    def test_exponential_inverse(self):
        half_sq = X * X * Fraction(1, 2)
        assert WeightedExpression.exp_of(half_sq) * WeightedExpression.exp_of(-half_sq) == WeightedExpression.one()

    def test_laguerre_weight_shift(self):
        alpha = Fraction(1, 2)
        top = WeightedExpression.power(0, alpha + 3) * WeightedExpression.exp_of(-X)
        assert top / w_poly(X) == WeightedExpression.power(0, alpha + 2) * WeightedExpression.exp_of(-X)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            WeightedExpression.one() / WeightedExpression.zero()

    def test_closure_random(self):
        rng = random.Random(5)
        roots = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)]
        for _ in range(40):
            u = _random_weighted(rng, roots)
            v = _random_weighted(rng, roots)
            for result in (u * v, u / v, u.diff()):
                assert isinstance(result, WeightedExpression)
                for pf in result.powers:
                    assert 0 < pf.exponent < 1


class TestExpIntegral:
    def test_gaussian_ground_state(self):
        result = integrate_rational(as_rational_function(X))
        assert exp_integral(result, -1) == WeightedExpression.exp_of(X * X * Fraction(-1, 2))

    def test_quadratic_drift_exponential_factor(self):
        # exp[int (a x^2 + b x + c)/(x^2-1)] = e^(ax) (x-1)^((a+b+c)/2) (x+1)^((b-a-c)/2)
        a, b, c = Fraction(2), Fraction(1), Fraction(-1)
        r = RationalFunction(Polynomial.of(c, b, a), X_SQ_MINUS_1)
        produced = exp_integral(integrate_rational(r), 1)
        expected = (
            WeightedExpression.exp_of(X * a)
            * WeightedExpression.power(1, (a + b + c) / 2)
            * WeightedExpression.power(-1, (b - a - c) / 2)
        )
        assert produced == expected
        assert produced.log_derivative() == r

    def test_zero_integral(self):
        result = integrate_rational(RationalFunction(ZERO))
        assert exp_integral(result, 1) == WeightedExpression.one()

    def test_roundtrip_property(self):
        # exp_integral(integrate(t)) has log derivative t for in-class t
        rng = random.Random(13)
        roots = [Fraction(0), Fraction(1), Fraction(-1), Fraction(3)]
        for _ in range(30):
            den = ONE
            for root in rng.sample(roots, rng.randint(0, 2)):
                den = den * Polynomial.of(-root, 1)
            num = Polynomial(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))))
            if num.is_zero:
                continue
            t = RationalFunction(num, den)
            assert exp_integral(integrate_rational(t), 1).log_derivative() == t


class TestLogDerivative:
    def test_gaussian(self):
        assert WeightedExpression.exp_of(X * X * Fraction(-1, 2)).log_derivative() == as_rational_function(-X)

    def test_half_power_pair(self):
        for n in (1, 3, 5):
            w = WeightedExpression.power(1, Fraction(n, 2)) * WeightedExpression.power(-1, Fraction(n, 2))
            assert w.log_derivative() == RationalFunction(X * n, X_SQ_MINUS_1)

    def test_laguerre_weight(self):
        alpha_n = Fraction(7, 2)
        w = WeightedExpression.power(0, alpha_n) * WeightedExpression.exp_of(-X)
        assert w.log_derivative() == RationalFunction(Polynomial.of(alpha_n, -1), X)


class TestAsPolynomial:
    def test_plain_coefficient(self):
        assert w_poly(Polynomial.of(-1, 0, 3)).as_polynomial() == Polynomial.of(-1, 0, 3)

    def test_surviving_exponential(self):
        with pytest.raises(NotPolynomialError):
            (WeightedExpression.exp_of(X) * w_poly(X)).as_polynomial()

    def test_square_of_half_power(self):
        q = WeightedExpression.power(1, HALF)
        assert (q * q).as_polynomial() == X - 1

    def test_zero(self):
        assert WeightedExpression.zero().as_polynomial() == ZERO


class TestScalarRatio:
    def test_plain_scalar(self):
        assert w_poly(X_SQ_MINUS_1 * 2).scalar_ratio(w_poly(X_SQ_MINUS_1)) == 2

    def test_exp_constants_removed_by_normalization(self):
        u = WeightedExpression.exp_of(X)
        v = WeightedExpression.exp_of(Polynomial.of(1, 1))
        assert u.scalar_ratio(v) == 1

    def test_different_functions(self):
        assert w_poly(X).scalar_ratio(w_poly(X * X)) is None

    def test_zero_rules(self):
        zero = WeightedExpression.zero()
        assert zero.scalar_ratio(zero) == 1
        assert zero.scalar_ratio(WeightedExpression.one()) is None
        assert WeightedExpression.one().scalar_ratio(zero) is None


class TestAddition:
    def test_same_cell(self):
        q = sqrt_x2m1()
        assert w_poly(X) * q + w_poly(ONE) * q == w_poly(X + 1) * q

    def test_incompatible_cells_rejected(self):
        with pytest.raises(ValueError):
            sqrt_x2m1() + WeightedExpression.one()
