"""Integer polynomials and the Poncelet polynomials P_n built from cyclotomics.

Coefficient lists are ascending and exact (Python ints), so nothing here
ever rounds.  P_n is built from the n-th cyclotomic polynomial; the
t-iteration and the doubling formula give two further routes to the same
coefficients, which the test-suite plays off against each other.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .field import Fp, Fp2, check_prime, inv_mod, legendre_symbol, sqrt_mod
from .pencil import diamond_relation


class InexactDivisionError(ArithmeticError):
    pass


class SingularIterateError(ZeroDivisionError):
    """The t-iteration reached t = 2."""


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPolynomial:
        return cls((a,))

    @classmethod
    def monomial(cls, deg: int, a: int = 1) -> IntPolynomial:
        return cls((0,) * deg + (a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            body = "" if (mag == 1 and i) else str(mag)
            if i:
                body += "x" if i == 1 else f"x^{i}"
            terms.append((sign, body))
        s0, b0 = terms[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _lift(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPolynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result, base = IntPolynomial.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation at an int, Fraction, Fp or another polynomial."""
        acc = 0 if not isinstance(x, IntPolynomial) else IntPolynomial()
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        return self(inner)

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % p
        return acc

    def roots_mod(self, p: int) -> list[int]:
        """All roots in GF(p) by exhaustive evaluation."""
        if all(a % p == 0 for a in self.coeffs):
            raise ValueError(f"polynomial vanishes identically mod {p}")
        return [x for x in range(p) if self.eval_mod(x, p) == 0]

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntPolynomial:
        g = self.content()
        if g == 0:
            return self
        return IntPolynomial(a // g for a in self.coeffs)

    def canonical(self) -> IntPolynomial:
        """Primitive part with positive leading coefficient."""
        q = self.primitive()
        return -q if q.lead < 0 else q

    def reverse(self, degree: int | None = None) -> IntPolynomial:
        """x^degree * f(1/x)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def scale_var(self, a: int) -> IntPolynomial:
        """f(a x)."""
        return IntPolynomial(c * a**i for i, c in enumerate(self.coeffs))

    def divmod_exact(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division over Z; raises InexactDivisionError if a quotient coefficient is not integral."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = divisor.degree
        lc = divisor.lead
        quot = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            a = rem[i]
            if a == 0:
                continue
            q, r = divmod(a, lc)
            if r:
                raise InexactDivisionError(f"{self} is not divisible by {divisor} over Z")
            quot[i - dq] = q
            for j, b in enumerate(divisor.coeffs):
                rem[i - dq + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod_exact(divisor)
        if not r.is_zero():
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")
        return q

    def divides(self, other: IntPolynomial) -> bool:
        """True when self divides other in Q[x]."""
        return _pseudo_rem(other, self).is_zero()

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    def to_strings(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        return cls(int(s) for s in json.loads(text))


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of lc(b)^k * a on division by b; stays in Z[x]."""
    if b.is_zero():
        raise ZeroDivisionError
    r = list(a.coeffs)
    db, lc = b.degree, b.lead
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lead, shift = r[-1], len(r) - 1 - db
        r = [x * lc for x in r]
        for j, c in enumerate(b.coeffs):
            r[shift + j] -= lead * c
        r.pop()
    return IntPolynomial(r).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """GCD in Q[x], returned in canonical (primitive, positive leading) form."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, _pseudo_rem(a, b)
    if a.is_zero():
        return a
    return a.canonical()


class RationalFunction:
    """Reduced quotient of two integer polynomials with positive leading denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: IntPolynomial | None = None):
        den = IntPolynomial.const(1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = IntPolynomial(), IntPolynomial.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                # g is primitive, so by Gauss's lemma both quotients are integral
                num, den = num.exact_div(g), den.exact_div(g)
            c = gcd(num.content(), den.content())
            num = IntPolynomial(a // c for a in num.coeffs)
            den = IntPolynomial(a // c for a in den.coeffs)
            if den.lead < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_fraction_poly(cls, coeffs: Sequence[Fraction], den: IntPolynomial | None = None) -> RationalFunction:
        """(sum coeffs[i] x^i) / den with rational coefficients."""
        lcm = 1
        for q in coeffs:
            lcm = lcm * Fraction(q).denominator // gcd(lcm, Fraction(q).denominator)
        num = IntPolynomial(int(Fraction(q) * lcm) for q in coeffs)
        d = IntPolynomial.const(1) if den is None else den
        return cls(num, d * lcm)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        return Fraction(self.num(x)) / self.den(x) if isinstance(x, (int, Fraction)) else self.num(x) / self.den(x)

    def eval_mod(self, x: int, p: int) -> int:
        d = self.den.eval_mod(x, p)
        return self.num.eval_mod(x, p) * inv_mod(d, p) % p


# -- number theory helpers -------------------------------------------------


def totient(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def polygon_lengths(p: int) -> list[int]:
    """Side counts n >= 3 that can occur in PG(2,p): the divisors of p+1."""
    return [n for n in divisors(p + 1) if n >= 3]


def doubling_period(n: int) -> int:
    """Least s >= 1 with 2^s = +-1 (mod n), n odd."""
    if n % 2 == 0 or n < 3:
        raise ValueError("doubling period is defined for odd n >= 3")
    s, t = 1, 2 % n
    while t not in (1, n - 1):
        t = t * 2 % n
        s += 1
    return s


# -- cyclotomic and Poncelet polynomials -----------------------------------


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """n-th cyclotomic polynomial via (x^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError("n must be positive")
    f = IntPolynomial.monomial(n) - 1
    for d in divisors(n)[:-1]:
        f = f.exact_div(cyclotomic(d))
    return f


def _lucas_v(j: int) -> list[IntPolynomial]:
    """V_0..V_j with V_i(x + 1/x) = x^i + x^{-i}."""
    y = IntPolynomial.x()
    v = [IntPolynomial.const(2), y]
    while len(v) <= j:
        v.append(y * v[-1] - v[-2])
    return v[: j + 1]


def palindromic_reduction(f: IntPolynomial) -> IntPolynomial:
    """q with f(x) x^{-d} = q(x + 1/x), for palindromic f of degree 2d."""
    if f.degree % 2:
        raise ValueError("palindromic reduction needs even degree")
    d = f.degree // 2
    if any(f[i] != f[f.degree - i] for i in range(d)):
        raise ValueError("polynomial is not palindromic")
    v = _lucas_v(d)
    q = IntPolynomial.const(f[d])
    for j in range(1, d + 1):
        q = q + v[j] * f[d + j]
    return q


@lru_cache(maxsize=None)
def poncelet_polynomial(n: int) -> IntPolynomial:
    """P_n, whose roots mod p are the k with (O_k, O_1) carrying an n-gon.

    Chain: Phi_n -> q_n(x + 1/x) -> r_n(x) = q_n(2x) -> s_n(x) = r_n(2x - 1)
    -> x^{phi(n)/2} s_n(1/x), then made primitive with positive leading term.
    """
    if n < 3:
        raise ValueError("Poncelet polygons have at least 3 sides")
    q = palindromic_reduction(cyclotomic(n))
    r = q.scale_var(2)
    s = r.compose(IntPolynomial((-1, 2)))
    d = totient(n) // 2
    P = s.reverse(d).canonical()
    assert P.degree == d
    return P


def double_polynomial(Pn: IntPolynomial, n: int) -> IntPolynomial:
    """P_{2n} from P_n by substituting k^2/(k-2)^2.

    The substituted numerator is divided by P_n only when that division is
    exact (odd n); either way the result must have degree phi(2n)/2.
    """
    d = Pn.degree
    k = IntPolynomial.x()
    num_sub, den_sub = k * k, (k - 2) * (k - 2)
    # (k-2)^{2d} P_n(k^2/(k-2)^2) = sum a_i k^{2i} (k-2)^{2(d-i)}
    acc = IntPolynomial()
    for i, a in enumerate(Pn.coeffs):
        acc = acc + (num_sub**i) * (den_sub ** (d - i)) * a
    try:
        acc = acc.exact_div(Pn)
    except InexactDivisionError:
        pass
    result = acc.canonical()
    target = totient(2 * n) // 2
    if result.degree != target:
        raise InexactDivisionError(
            f"doubling P_{n} gave degree {result.degree}, expected {target}"
        )
    return result


# -- t-iteration -------------------------------------------------------------


def t_step_mod(t: int, p: int) -> int:
    d = (t - 2) % p
    if d == 0:
        raise SingularIterateError("t = 2 has no successor")
    return t * t * inv_mod(d * d, p) % p


def t_iterate(k, steps: int) -> list:
    """t_0 = k, t_{i+1} = t_i^2 / (t_i - 2)^2.

    ``k`` an ``Fp`` gives a list of ``Fp``; ``k`` an ``IntPolynomial`` (use
    ``IntPolynomial.x()`` for the symbolic variable) gives reduced
    ``RationalFunction`` iterates.
    """
    if isinstance(k, Fp):
        out = [k]
        for _ in range(steps):
            out.append(Fp(t_step_mod(out[-1].value, k.p), k.p))
        return out
    if isinstance(k, IntPolynomial):
        num, den = k, IntPolynomial.const(1)
        out = [RationalFunction(num, den)]
        for _ in range(steps):
            num, den = num * num, (num - den * 2) ** 2
            c = gcd(num.content(), den.content())
            num = IntPolynomial(a // c for a in num.coeffs)
            den = IntPolynomial(a // c for a in den.coeffs)
            out.append(RationalFunction(num, den))
        return out
    raise TypeError("t_iterate needs an Fp value or an IntPolynomial")


def iteration_polynomial(s: int) -> IntPolynomial:
    """Numerator of t_0 - t_s as a polynomial in k (all periodic points of period | s)."""
    k = IntPolynomial.x()
    num, den = k, IntPolynomial.const(1)
    for _ in range(s):
        num, den = num * num, (num - den * 2) ** 2
    # iterates of k have denominator 1 before reduction, so t_0 - t_s = (k den - num)/den
    return (k * den - num)


def coefficients_by_iteration(n: int, p: int) -> set[Fp]:
    """k with t_0 = t_{s_n} and t_0 != t_i (0 < i < s_n), restricted to O_k inside O_1.

    Candidates whose iteration hits t = 2 are dropped.  If two polygon
    lengths with the same doubling period both divide p+1, the surplus is
    separated by the exact length of each coefficient.
    """
    check_prime(p)
    if n % 2 == 0 or n < 3:
        raise ValueError("the iteration route handles odd n >= 3 only")
    if (p + 1) % n:
        raise ValueError(f"{n} does not divide p+1 = {p + 1}")
    s = doubling_period(n)
    found = set()
    for k in range(1, p):
        try:
            ts = [k]
            for _ in range(s):
                ts.append(t_step_mod(ts[-1], p))
        except SingularIterateError:
            continue
        if ts[s] != k or any(ts[i] == k for i in range(1, s)):
            continue
        if k != 1 and diamond_relation(k, 1, p):
            found.add(k)
    if len(found) > totient(n) // 2:
        found = {k for k in found if coefficient_length(k, p) == n}
    return {Fp(k, p) for k in found}


def coefficients_by_polynomial(n: int, p: int) -> set[Fp]:
    """Roots of P_n mod p."""
    check_prime(p)
    if (p + 1) % n:
        raise ValueError(f"{n} does not divide p+1 = {p + 1}")
    roots = set(poncelet_polynomial(n).roots_mod(p))
    assert len(roots) == totient(n) // 2, f"P_{n} has {len(roots)} roots mod {p}"
    return {Fp(k, p) for k in roots}


def coefficient_length(k: int | Fp, p: int) -> int | None:
    """Closed-form polygon length for (O_k, O_1), or None if O_k is not inside O_1.

    With u = 2/k - 1, the root zeta = u + sqrt(u^2 - 1) lives in
    GF(p)(sqrt(u^2 - 1)) and its multiplicative order is the side count.
    """
    k = int(k) % p
    if k in (0, 1) or not diamond_relation(k, 1, p):
        return None
    u = (2 * inv_mod(k, p) - 1) % p
    disc = (u * u - 1) % p
    return Fp2(u, 1, disc, p).order()


def double_coefficient(k: Fp) -> set[Fp]:
    """2 / (1 -+ 1/sqrt(k)), keeping only values different from k."""
    p = k.p
    if k.value == 1:
        raise ZeroDivisionError("k = 1 makes 1 - 1/sqrt(k) vanish")
    roots = sqrt_mod(k.value, p)
    if roots is None or k.value == 0:
        raise ValueError(f"{k.value} is not a nonzero square mod {p}")
    out = set()
    for r in roots:
        d = (1 - inv_mod(r, p)) % p
        h = 2 * inv_mod(d, p) % p
        if h != k.value:
            out.add(Fp(h, p))
    return out


def existence_transfer_check(h: Fp, k: Fp) -> bool:
    """(h-1)(k-1) must be a nonzero square, so h-1 and k-1 share their quadratic character."""
    if h == k:
        return False
    return legendre_symbol(((h - 1) * (k - 1)).value, h.p) == 1


def coefficients_by_doubling(n: int, p: int) -> set[Fp]:
    """Even n: double every (n/2)-coefficient and discard the (n/2)-coefficients that reappear."""
    if n % 2 or n < 6:
        raise ValueError("doubling route needs even n >= 6")
    half = coefficients_by_polynomial(n // 2, p)
    out = set()
    for k in half:
        out |= double_coefficient(k)
    return out - half
