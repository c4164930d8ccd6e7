import pytest
from hypothesis import given
from hypothesis import strategies as st

from poncelet.field import (
    FieldMismatchError,
    Fp,
    Fp2,
    Residue,
    check_prime,
    fp2_add,
    fp2_inv,
    fp2_mul,
    inv,
    inv_mod,
    is_prime,
    legendre,
    legendre_symbol,
    odd_primes,
    smallest_nonsquare,
    sqrt,
    sqrt_mod,
)

from conftest import MEDIUM_PRIMES

primes = st.sampled_from(MEDIUM_PRIMES)


def _trial_division(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


class TestPrimes:
    def test_matches_trial_division(self):
        assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if _trial_division(n)]

    def test_large_prime_and_carmichael(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(561)
        assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7

    @pytest.mark.parametrize("bad", [0, 1, 2, 9, 15, -7, 4.0, True])
    def test_check_prime_rejects(self, bad):
        with pytest.raises(ValueError):
            check_prime(bad)

    def test_odd_primes(self):
        assert odd_primes(31) == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


class TestLegendre:
    @pytest.mark.parametrize("p", [7, 11, 13])
    def test_against_square_table(self, p):
        squares = {x * x % p for x in range(1, p)}
        for x in range(p):
            expected = 0 if x == 0 else (1 if x in squares else -1)
            assert legendre_symbol(x, p) == expected

    def test_residue_enum(self):
        assert legendre(Fp(0, 7)) is Residue.ZERO
        assert legendre(Fp(2, 7)) is Residue.SQUARE
        assert legendre(Fp(3, 7)) is Residue.NONSQUARE

    @given(primes, st.integers(), st.integers())
    def test_multiplicative(self, p, a, b):
        assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)

    def test_smallest_nonsquare(self):
        assert smallest_nonsquare(13) == 2
        assert smallest_nonsquare(41) == 3
        assert smallest_nonsquare(71) == 7


class TestSqrt:
    def test_examples(self):
        assert sqrt_mod(2, 7) == (3, 4)
        assert sqrt_mod(3, 7) is None
        assert sqrt_mod(0, 7) == (0, 0)
        assert sqrt(Fp(3, 11)) == (Fp(5, 11), Fp(6, 11))

    @given(primes, st.integers(min_value=1))
    def test_roots_square_back(self, p, x):
        roots = sqrt_mod(x, p)
        if x % p == 0:
            assert roots == (0, 0)
        elif legendre_symbol(x, p) == 1:
            r, s = roots
            assert r * r % p == x % p and (r + s) % p == 0 and r < s
        else:
            assert roots is None

    def test_tonelli_shanks_branch(self):
        # p = 1 (mod 8) exercises the full loop
        p = 73
        for x in range(1, p):
            roots = sqrt_mod(x, p)
            assert (roots is not None) == (legendre_symbol(x, p) == 1)


class TestFp:
    def test_arithmetic(self):
        a, b = Fp(5, 11), Fp(9, 11)
        assert a + b == 3
        assert a - b == 7
        assert a * b == 1
        assert a / b == 25 % 11
        assert -a == 6
        assert 1 - a == 7
        assert 3 / a == Fp(3 * 9, 11)
        assert a**-1 == 9 and a**10 == 1

    def test_inverse(self):
        assert inv(Fp(3, 7)) == Fp(5, 7)
        with pytest.raises(ZeroDivisionError):
            Fp(0, 7).inverse()
        with pytest.raises(ZeroDivisionError):
            inv_mod(14, 7)

    def test_mismatch(self):
        with pytest.raises(FieldMismatchError):
            Fp(1, 7) + Fp(1, 11)

    def test_set_of_fp_equals_set_of_int(self):
        assert {Fp(13, 53), Fp(36, 53)} == {13, 36}

    @given(primes, st.integers(), st.integers(), st.integers())
    def test_field_axioms(self, p, x, y, z):
        a, b, c = Fp(x, p), Fp(y, p), Fp(z, p)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        if b:
            assert (a / b) * b == a


class TestFp2:
    def test_requires_nonsquare(self):
        with pytest.raises(ValueError):
            Fp2(1, 1, 2, 7)

    def test_sqrt_c_squares_to_c(self):
        r = Fp2.sqrt_c(2, 13)
        assert r * r == Fp2.embed(2, 2, 13)

    def test_helpers(self):
        x, y = Fp2(3, 4, 2, 13), Fp2(5, 1, 2, 13)
        assert fp2_add(x, y) == Fp2(8, 5, 2, 13)
        assert fp2_mul(x, y) == Fp2(15 + 8, 3 + 20, 2, 13)
        assert fp2_mul(x, fp2_inv(x)) == Fp2(1, 0, 2, 13)

    @given(primes, st.integers(), st.integers())
    def test_norm_multiplicative_and_frobenius(self, p, a, b):
        c = smallest_nonsquare(p)
        x = Fp2(a, b, c, p)
        y = Fp2(b + 1, a, c, p)
        assert (x * y).norm() == x.norm() * y.norm() % p
        # Frobenius is conjugation
        assert x**p == x.conjugate()

    @given(primes, st.integers(), st.integers())
    def test_order_divides_group_order(self, p, a, b):
        c = smallest_nonsquare(p)
        x = Fp2(a, b, c, p)
        if x:
            n = x.order()
            assert (p * p - 1) % n == 0
            assert x**n == Fp2(1, 0, c, p)

    def test_division_and_mismatch(self):
        x = Fp2(3, 4, 2, 13)
        assert x / x == Fp2(1, 0, 2, 13)
        assert (x * 2).is_base() is False and Fp2(5, 0, 2, 13).is_base()
        with pytest.raises(FieldMismatchError):
            x + Fp2(1, 1, 5, 13)
        with pytest.raises(ZeroDivisionError):
            Fp2(0, 0, 2, 13).inverse()
