import random

import pytest
import sympy

from poncelet.algebra import IntPolynomial, RationalFunction, divisors, polygon_lengths, poncelet_polynomial
from poncelet.algebra import coefficients_by_polynomial
from poncelet.cayley import (
    bareiss_det,
    cayley_coefficients,
    cayley_condition,
    criterion_polynomial,
    cross_check,
    expand_series,
    half_binomial,
    hankel_indices,
    strip_divisor_factors,
)
from poncelet.field import odd_primes

X = IntPolynomial.x()


def R(num, den):
    return RationalFunction(IntPolynomial(num), IntPolynomial(den))


class TestSeries:
    def test_low_order_terms(self):
        s = expand_series(4)
        assert s[0] == R([1], [1])
        assert s[2] == R([4, -1], [0, 8])
        assert s[3] == R([-2, 1], [0, 16])
        assert s[4] == R([8, -5], [0, 128])

    def test_half_binomial(self):
        for m in range(12):
            assert half_binomial(m) == sympy.binomial(sympy.Rational(1, 2), m)

    def test_against_sympy_series(self):
        t, k = sympy.symbols("t k", positive=True)
        expansion = sympy.series((1 + t / k) * sympy.sqrt(1 + t), t, 0, 9).removeO()
        s = expand_series(8)
        for m in range(9):
            expected = sympy.together(expansion.coeff(t, m))
            num = sum(c * k**i for i, c in enumerate(s[m].num))
            den = sum(c * k**i for i, c in enumerate(s[m].den))
            assert sympy.simplify(num / den - expected) == 0

    def test_truncation(self):
        s = expand_series(3)
        with pytest.raises(IndexError):
            s[4]
        with pytest.raises(ValueError):
            expand_series(1)


class TestHankel:
    def test_shapes(self):
        assert hankel_indices(3) == [[2]]
        assert hankel_indices(4) == [[3]]
        assert hankel_indices(5) == [[2, 3], [3, 4]]
        assert hankel_indices(6) == [[3, 4], [4, 5]]
        assert hankel_indices(7) == [[2, 3, 4], [3, 4, 5], [4, 5, 6]]

    def test_bareiss_against_sympy(self):
        rng = random.Random(5)
        k = sympy.symbols("k")
        for size in range(1, 5):
            M = [[IntPolynomial(rng.randint(-9, 9) for _ in range(3)) for _ in range(size)] for _ in range(size)]
            S = sympy.Matrix([[sum(c * k**i for i, c in enumerate(e)) for e in row] for row in M])
            got = sum(c * k**i for i, c in enumerate(bareiss_det(M)))
            assert sympy.expand(S.det() - got) == 0

    def test_bareiss_pivoting(self):
        M = [[IntPolynomial(), IntPolynomial([1])], [IntPolynomial([1]), IntPolynomial()]]
        assert bareiss_det(M) == IntPolynomial([-1])
        assert bareiss_det([[IntPolynomial(), X], [IntPolynomial(), X]]).is_zero()

    def test_small_conditions(self):
        assert cayley_condition(3, expand_series(2)).num.canonical() == X - 4
        assert cayley_condition(4, expand_series(3)).num.canonical() == X - 2

    def test_pentagon_exact(self):
        # A2 A4 - A3^2 = (k^2 - 12k + 16) / (1024 k^2)
        got = cayley_condition(5, expand_series(4))
        assert got == RationalFunction(X**2 - X * 12 + 16, X**2 * 1024)

    def test_order_check(self):
        with pytest.raises(ValueError):
            cayley_condition(7, expand_series(4))


class TestCrossCheck:
    @pytest.mark.parametrize("n", range(3, 19))
    def test_cross_check(self, n):
        assert cross_check(n, 18)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            cross_check(13, 12)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_divisor_factors_each_once(self, n):
        # measured: every proper divisor m >= 3 contributes P_m exactly once
        rest, found = strip_divisor_factors(n, criterion_polynomial(n))
        assert found == {m: 1 for m in divisors(n)[:-1] if m >= 3}
        assert rest == poncelet_polynomial(n)

    def test_criterion_degree(self):
        for n in range(3, 19):
            assert criterion_polynomial(n).degree == (n - 1) // 2


class TestModP:
    @pytest.mark.parametrize("p", odd_primes(61))
    def test_matches_polynomial_roots(self, p):
        for n in polygon_lengths(p):
            assert cayley_coefficients(n, p) == coefficients_by_polynomial(n, p)

    def test_example(self):
        assert cayley_coefficients(9, 53) == {13, 36, 40}
