"""Exact arithmetic in GF(p) and in the quadratic extension GF(p)(sqrt(c)).

Elements are immutable.  The hot loops elsewhere in the package work on
plain integers reduced mod p through the ``*_mod`` helpers; the ``Fp`` and
``Fp2`` classes wrap the same helpers for callers that want checked,
self-describing values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

# Deterministic for every n < 3.3 * 10**24, which covers 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, otherwise raise ``ValueError``."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return p


def odd_primes(upto: int) -> list[int]:
    return [q for q in range(3, upto + 1, 2) if is_prime(q)]


class Residue(enum.Enum):
    ZERO = "zero"
    SQUARE = "square"
    NONSQUARE = "nonsquare"


def legendre_symbol(x: int, p: int) -> int:
    """Euler's criterion: 0, 1 or -1."""
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def is_square_mod(x: int, p: int) -> bool:
    """True for nonzero quadratic residues only."""
    return legendre_symbol(x, p) == 1


def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(x, p - 2, p)


@lru_cache(maxsize=None)
def smallest_nonsquare(p: int) -> int:
    return next(z for z in range(2, p) if legendre_symbol(z, p) == -1)


def sqrt_mod(x: int, p: int) -> tuple[int, int] | None:
    """Both square roots of x mod p, smaller representative first.

    Returns None when x is a nonsquare.  Uses the (p+1)/4 shortcut when
    p = 3 (mod 4) and Tonelli-Shanks otherwise.
    """
    x %= p
    if x == 0:
        return (0, 0)
    if legendre_symbol(x, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(x, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = smallest_nonsquare(p)
        m, cc, t, r = s, pow(z, q, p), pow(x, q, p), pow(x, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(cc, 1 << (m - i - 1), p)
            m, cc = i, b * b % p
            t, r = t * cc % p, r * b % p
    assert r * r % p == x
    return tuple(sorted((r, p - r)))


@dataclass(frozen=True, slots=True)
class Fp:
    """An element of GF(p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * inv_mod(o, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o * inv_mod(self.value, self.p), self.p)

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return Fp(pow(inv_mod(self.value, self.p), -e, self.p), self.p)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        # hash like the reduced int so sets of Fp compare equal to sets of ints
        return hash(self.value)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)

    def inverse(self) -> Fp:
        return Fp(inv_mod(self.value, self.p), self.p)

    def legendre(self) -> Residue:
        return legendre(self)

    def sqrt(self) -> tuple[Fp, Fp] | None:
        return sqrt(self)


def legendre(x: Fp) -> Residue:
    s = legendre_symbol(x.value, x.p)
    return (Residue.ZERO, Residue.SQUARE, Residue.NONSQUARE)[s]


def sqrt(x: Fp) -> tuple[Fp, Fp] | None:
    roots = sqrt_mod(x.value, x.p)
    if roots is None:
        return None
    return Fp(roots[0], x.p), Fp(roots[1], x.p)


def inv(x: Fp) -> Fp:
    return x.inverse()


@dataclass(frozen=True, slots=True)
class Fp2:
    """a + b*sqrt(c) in GF(p)(sqrt(c)), c a fixed nonsquare mod p."""

    a: int
    b: int
    c: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        object.__setattr__(self, "c", self.c % self.p)
        if legendre_symbol(self.c, self.p) != -1:
            raise ValueError(f"{self.c} is not a nonsquare mod {self.p}")

    @classmethod
    def embed(cls, x: int | Fp, c: int, p: int) -> Fp2:
        return cls(int(x), 0, c, p)

    @classmethod
    def sqrt_c(cls, c: int, p: int) -> Fp2:
        return cls(0, 1, c, p)

    def _check(self, other: Fp2) -> Fp2:
        if isinstance(other, (int, Fp)) and not isinstance(other, bool):
            if isinstance(other, Fp) and other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return Fp2(int(other), 0, self.c, self.p)
        if not isinstance(other, Fp2):
            return NotImplemented
        if (other.p, other.c) != (self.p, self.c):
            raise FieldMismatchError("elements of different quadratic extensions")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return Fp2(self.a + o.a, self.b + o.b, self.c, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return Fp2(self.a - o.a, self.b - o.b, self.c, self.p)

    def __neg__(self):
        return Fp2(-self.a, -self.b, self.c, self.p)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        x, y, z, w = self.a, self.b, o.a, o.b
        return Fp2(x * z + y * w * self.c, y * z + x * w, self.c, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inverse()
        result = Fp2(1, 0, self.c, self.p)
        e = abs(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def conjugate(self) -> Fp2:
        return Fp2(self.a, -self.b, self.c, self.p)

    def norm(self) -> int:
        return (self.a * self.a - self.c * self.b * self.b) % self.p

    def inverse(self) -> Fp2:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p^2)")
        ninv = inv_mod(n, self.p)
        return Fp2(self.a * ninv, -self.b * ninv, self.c, self.p)

    def is_base(self) -> bool:
        return self.b == 0

    def order(self) -> int:
        """Multiplicative order; divides p^2 - 1."""
        if not self:
            raise ZeroDivisionError("0 has no multiplicative order")
        m = self.p * self.p - 1
        order = m
        for q in _prime_factors(m):
            while order % q == 0 and (self ** (order // q)) == Fp2(1, 0, self.c, self.p):
                order //= q
        return order


def fp2_add(x: Fp2, y: Fp2) -> Fp2:
    return x + y


def fp2_mul(x: Fp2, y: Fp2) -> Fp2:
    return x * y


def fp2_inv(x: Fp2) -> Fp2:
    return x.inverse()


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
