from fractions import Fraction
from random import Random

import pytest

from graphzeta.algebra import (
    Matrix,
    P_ONE,
    Polynomial,
    RationalFunction,
    T,
    TruncatedSeries,
    cofactor_determinant,
)

RF = RationalFunction


def poly(*coeffs):
    return Polynomial(coeffs)


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)
        assert poly(0, 0).is_zero
        assert poly().degree == -1

    def test_arithmetic(self):
        p = poly(1, 1)
        assert p * p == poly(1, 2, 1)
        assert p - p == Polynomial()
        assert (p + poly(0, -1)) == poly(1)
        assert poly(-1, 0, 1) == (T - 1) * (T + 1)

    def test_pow_and_eval(self):
        p = (1 - T) ** 3
        assert p == poly(1, -3, 3, -1)
        assert p(Fraction(1, 2)) == Fraction(1, 8)

    def test_divmod_exact(self):
        num = poly(-1, 0, 1)  # t^2 - 1
        q, r = divmod(num, poly(-1, 1))  # t - 1
        assert q == poly(1, 1) and r.is_zero
        assert num.exact_div(poly(1, 1)) == poly(-1, 1)
        with pytest.raises(ValueError):
            poly(1, 1).exact_div(poly(0, 1))

    def test_gcd_is_monic(self):
        a = poly(-2, 0, 2)  # 2(t^2 - 1)
        b = poly(3, 3)  # 3(t + 1)
        assert Polynomial.gcd(a, b) == poly(1, 1)
        assert Polynomial.gcd(Polynomial(), b) == poly(1, 1)
        assert Polynomial.gcd(poly(5), a) == P_ONE

    def test_rendering(self):
        assert str(poly(1, Fraction(-3, 2), 1)) == "1 - 3/2*t + t^2"
        assert str(Polynomial()) == "0"
        assert str(poly(0, 1)) == "t"
        assert str(poly(0, -1, 0, Fraction(1, 3))) == "-t + 1/3*t^3"


class TestRationalFunction:
    def test_common_factor_cancels_on_construction(self):
        f = RF(poly(-1, 0, 1), poly(-1, 1))  # (t^2-1)/(t-1)
        assert f == RF(poly(1, 1))
        assert f.is_polynomial and f.as_polynomial() == poly(1, 1)

    def test_inverse_pair_multiplies_to_one(self):
        f = RF(P_ONE, poly(1, -1))  # 1/(1-t)
        assert f * poly(1, -1) == RF(P_ONE)

    def test_addition_with_common_denominator(self):
        f = RF(P_ONE, poly(1, 1))  # 1/(1+t)
        g = RF(P_ONE, poly(1, -1))  # 1/(1-t)
        assert f + g == RF(poly(2), poly(1, 0, -1))

    def test_division_and_zero_divisor(self):
        f = RF(poly(0, 1))
        assert f / f == RF(P_ONE)
        with pytest.raises(ZeroDivisionError, match="zero divisor"):
            f / RF(Polynomial())
        with pytest.raises(ZeroDivisionError, match="zero divisor"):
            RF(P_ONE, Polynomial())

    def test_canonical_form_is_re_reduction_stable(self):
        rng = Random(5)
        for _ in range(40):
            num = Polynomial([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])
            den = Polynomial([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])
            if den.is_zero:
                continue
            f = RF(num, den)
            assert Polynomial.gcd(f.num, f.den) == P_ONE or f.num.is_zero
            assert f.den.first_nonzero_coefficient() == 1
            assert RF(f.num, f.den) == f

    def test_rendering(self):
        assert str(RF(P_ONE, poly(1, 0, 0, -1))) == "1/(1 - t^3)"
        assert str(RF(poly(1, 1), poly(1, -1))) == "(1 + t)/(1 - t)"
        assert str(RF(poly(3))) == "3"


def random_matrix(rng, rows, cols, degree=1):
    return Matrix(
        [
            [
                Polynomial([Fraction(rng.randint(-3, 3)) for _ in range(degree + 1)])
                for _ in range(cols)
            ]
            for _ in range(rows)
        ],
        cols=cols,
    )


class TestMatrix:
    def test_identity_determinant(self):
        assert Matrix.identity(3).det() == RF(P_ONE)

    def test_two_by_two_expansion(self):
        m = Matrix([[poly(1, -1), poly(0, 1)], [poly(0, 1), poly(1, -1)]])
        assert m.det() == RF(poly(1, -2))

    def test_empty_matrix_determinant_is_one(self):
        assert Matrix([], cols=0).det() == RF(P_ONE)

    def test_non_square_rejected(self):
        m = Matrix([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(ValueError, match="shape"):
            m.det()
        with pytest.raises(ValueError, match="shape"):
            m.trace()

    def test_determinant_matches_cofactor_oracle(self):
        rng = Random(17)
        for size in (2, 3, 4, 5):
            m = random_matrix(rng, size, size)
            assert m.det() == cofactor_determinant(m)

    def test_determinant_multiplicative(self):
        rng = Random(23)
        for _ in range(5):
            a = random_matrix(rng, 3, 3)
            b = random_matrix(rng, 3, 3)
            assert (a @ b).det() == a.det() * b.det()

    def test_det_of_identity_minus_product_is_swap_invariant(self):
        # det(I - AB) = det(I - BA) for rectangular A, B
        rng = Random(31)
        for p, q in ((2, 4), (3, 5), (1, 3)):
            a = random_matrix(rng, p, q)
            b = random_matrix(rng, q, p)
            lhs = (Matrix.identity(p) - (a @ b)).det()
            rhs = (Matrix.identity(q) - (b @ a)).det()
            assert lhs == rhs

    def test_trace_power(self):
        cyclic = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert cyclic.trace_power(3) == RF(poly(3))
        assert cyclic.trace_power(1) == RF(Polynomial())
        c = Matrix([[Fraction(1, 2)]])
        assert c.trace_power(5) == RF(poly(Fraction(1, 32)))
        with pytest.raises(ValueError, match="period must be positive"):
            cyclic.trace_power(0)

    def test_trace_power_one_is_diagonal_sum(self):
        rng = Random(41)
        m = random_matrix(rng, 4, 4)
        expected = m[0, 0] + m[1, 1] + m[2, 2] + m[3, 3]
        assert m.trace_power(1) == expected

    def test_inverse(self):
        rng = Random(47)
        for _ in range(4):
            m = random_matrix(rng, 3, 3, degree=0)
            if m.det().is_zero:
                continue
            assert m @ m.inverse() == Matrix.identity(3)
        with pytest.raises(ZeroDivisionError, match="singular"):
            Matrix([[1, 1], [1, 1]]).inverse()


class TestTruncatedSeries:
    def test_geometric_series(self):
        f = RF(P_ONE, poly(1, 0, 0, -1))  # 1/(1-t^3)
        s = TruncatedSeries.from_rational_function(f, 7)
        assert s.coeffs == (1, 0, 0, 1, 0, 0, 1, 0)

    def test_scaled_geometric(self):
        f = RF(P_ONE, poly(1, Fraction(-3, 2)))
        s = TruncatedSeries.from_rational_function(f, 3)
        assert s.coeffs == (1, Fraction(3, 2), Fraction(9, 4), Fraction(27, 8))

    def test_ratio_with_polynomial_numerator(self):
        f = RF(poly(1, 1), poly(1, -1))
        assert TruncatedSeries.from_rational_function(f, 3).coeffs == (1, 2, 2, 2)

    def test_pole_at_origin_rejected(self):
        f = RF(P_ONE, poly(0, 1))
        with pytest.raises(ValueError, match="not a power series"):
            TruncatedSeries.from_rational_function(f, 3)

    def test_series_of_product_is_product_of_series(self):
        rng = Random(53)
        for _ in range(15):
            def rand_rf():
                num = Polynomial([Fraction(rng.randint(-3, 3)) for _ in range(3)])
                den = Polynomial([Fraction(1)] + [Fraction(rng.randint(-2, 2)) for _ in range(2)])
                return RF(num, den)

            f, g = rand_rf(), rand_rf()
            order = 8
            lhs = TruncatedSeries.from_rational_function(f * g, order)
            rhs = TruncatedSeries.from_rational_function(
                f, order
            ) * TruncatedSeries.from_rational_function(g, order)
            assert lhs == rhs

    def test_exp_of_zero(self):
        assert TruncatedSeries([0], 4).exp().coeffs == (1, 0, 0, 0, 0)

    def test_log_of_geometric(self):
        s = TruncatedSeries.from_rational_function(RF(P_ONE, poly(1, -1)), 4)
        assert s.log().coeffs == (
            0,
            1,
            Fraction(1, 2),
            Fraction(1, 3),
            Fraction(1, 4),
        )

    def test_exp_log_round_trip(self):
        s = TruncatedSeries([1, 1, 1], order=6)
        assert s.log().exp() == s.truncate(6)
        plain = TruncatedSeries([0, Fraction(1, 2), -1, Fraction(2, 3)], order=7)
        assert plain.exp().log() == plain.truncate(7)

    def test_domain_errors(self):
        with pytest.raises(ValueError, match="series domain"):
            TruncatedSeries([1, 1]).exp()
        with pytest.raises(ValueError, match="series domain"):
            TruncatedSeries([0, 1]).log()

    def test_rendering(self):
        s = TruncatedSeries([1, Fraction(3, 2), Fraction(9, 4)])
        assert str(s) == "[1, 3/2, 9/4]"
