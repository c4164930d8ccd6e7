"""Cayley's criterion for the pencil pairs (O_k, O_1).

det(tC + D) = c (t+1)(t+k)^2, so after dividing out k sqrt(c) the square
root is (1 + t/k) sqrt(1 + t).  An n-gon exists exactly when a Hankel
determinant in the series coefficients vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import IntPolynomial, InexactDivisionError, RationalFunction, divisors, poncelet_polynomial
from .field import check_prime, inv_mod


@lru_cache(maxsize=None)
def half_binomial(m: int) -> Fraction:
    """binom(1/2, m) by the product formula."""
    out = Fraction(1)
    for i in range(m):
        out *= Fraction(1, 2) - i
        out /= i + 1
    return out


@dataclass(frozen=True)
class CayleySeries:
    """Coefficients A_0..A_order of the normalized series, as functions of k."""

    order: int
    coeffs: tuple[RationalFunction, ...]

    def __getitem__(self, m: int) -> RationalFunction:
        if m > self.order:
            raise IndexError(f"series truncated at t^{self.order}")
        return self.coeffs[m]


def expand_series(order: int) -> CayleySeries:
    """A_m = binom(1/2, m) + binom(1/2, m-1)/k for m = 0..order."""
    if order < 2:
        raise ValueError("order must be at least 2")
    k = IntPolynomial.x()
    coeffs = [RationalFunction(IntPolynomial.const(1))]
    for m in range(1, order + 1):
        # (b_m k + b_{m-1}) / k
        coeffs.append(RationalFunction.from_fraction_poly([half_binomial(m - 1), half_binomial(m)], k))
    return CayleySeries(order, tuple(coeffs))


def hankel_indices(n: int) -> list[list[int]]:
    """Series indices of the Hankel matrix for n sides."""
    if n < 3:
        raise ValueError("n must be at least 3")
    m = n // 2
    if n % 2:
        return [[i + j + 2 for j in range(m)] for i in range(m)]
    return [[i + j + 3 for j in range(m - 1)] for i in range(m - 1)]


def required_order(n: int) -> int:
    return n - 1


def bareiss_det(M: list[list[IntPolynomial]]) -> IntPolynomial:
    """Fraction-free determinant over Z[k]; every division is exact."""
    a = [row[:] for row in M]
    size = len(a)
    if size == 0:
        return IntPolynomial.const(1)
    sign, prev = 1, IntPolynomial.const(1)
    for i in range(size - 1):
        if a[i][i].is_zero():
            swap = next((r for r in range(i + 1, size) if not a[r][i].is_zero()), None)
            if swap is None:
                return IntPolynomial()
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, size):
            for c in range(i + 1, size):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]).exact_div(prev)
        prev = a[i][i]
    det = a[-1][-1]
    return det if sign > 0 else -det


def cayley_condition(n: int, series: CayleySeries) -> RationalFunction:
    """The Hankel determinant for n sides as a reduced rational function of k."""
    idx = hankel_indices(n)
    need = max(max(row) for row in idx)
    if series.order < need:
        raise ValueError(f"n={n} needs the series up to t^{need}, got t^{series.order}")
    # every A_m (m >= 1) has denominator k * 2^e; scale to a common one
    scale = IntPolynomial.monomial(1, max(series[m].den.lead for m in range(1, need + 1)))
    M = []
    for row in idx:
        M.append([(series[m].num * scale).exact_div(series[m].den) for m in row])
    return RationalFunction(bareiss_det(M), scale ** len(idx))


def criterion_polynomial(n: int) -> IntPolynomial:
    """Canonical numerator of the Hankel determinant."""
    return cayley_condition(n, expand_series(required_order(n))).num.canonical()


def strip_divisor_factors(n: int, poly: IntPolynomial) -> tuple[IntPolynomial, dict[int, int]]:
    """Divide out P_m for proper divisors m >= 3 of n as often as they divide; return the rest and multiplicities."""
    found = {}
    for m in divisors(n)[:-1]:
        if m < 3:
            continue
        Pm, mult = poncelet_polynomial(m), 0
        while poly.degree >= Pm.degree:
            try:
                poly = poly.exact_div(Pm)
            except InexactDivisionError:
                break
            mult += 1
        if mult:
            found[m] = mult
    return poly.canonical(), found


def cross_check(n: int, max_n: int | None = None) -> bool:
    """Stripped Hankel criterion equals P_n up to sign."""
    if n < 3 or (max_n is not None and n > max_n):
        raise ValueError(f"n must lie in [3, {max_n}]")
    rest, _ = strip_divisor_factors(n, criterion_polynomial(n))
    return rest == poncelet_polynomial(n)


def _hankel_zeros_mod(n: int, p: int) -> set[int]:
    idx = hankel_indices(n)
    need = max(max(row) for row in idx)
    b = [half_binomial(m) for m in range(need + 1)]
    b_mod = [x.numerator * inv_mod(x.denominator, p) % p for x in b]
    zeros = set()
    for k in range(1, p):
        ik = inv_mod(k, p)
        A = [1] + [(b_mod[m] + b_mod[m - 1] * ik) % p for m in range(1, need + 1)]
        if _det_mod([[A[m] for m in row] for row in idx], p) == 0:
            zeros.add(k)
    return zeros


def _det_mod(M: list[list[int]], p: int) -> int:
    a = [row[:] for row in M]
    size, det = len(a), 1
    for i in range(size):
        piv = next((r for r in range(i, size) if a[r][i] % p), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det = det * a[i][i] % p
        inv = inv_mod(a[i][i], p)
        for r in range(i + 1, size):
            f = a[r][i] * inv % p
            for c in range(i, size):
                a[r][c] = (a[r][c] - f * a[i][c]) % p
    return det % p


def cayley_coefficients(n: int, p: int) -> set[int]:
    """k in GF(p) where the Hankel determinant for n vanishes but none for a proper divisor m >= 3 does.

    Works entirely mod p, without the integer polynomials.
    """
    check_prime(p)
    zeros = _hankel_zeros_mod(n, p)
    for m in divisors(n)[:-1]:
        if m >= 3:
            zeros -= _hankel_zeros_mod(m, p)
    return zeros
