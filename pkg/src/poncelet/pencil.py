"""The pencil O_k: x^2 + k y^2 + c k z^2 = 0 of PG(2,p) and the relation between its members."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .field import Fp2, check_prime, inv_mod, legendre_symbol, sqrt_mod
from .projective import (
    Collineation,
    ConicMatrix,
    Matrix,
    PointKind,
    ProjPoint,
    all_points,
    classify_point,
    mat_inv,
    mat_mul,
)


class PencilDomainError(ValueError):
    """Raised for indices outside [1, p-1] or for coinciding conics."""


def valid_c(p: int, c: int) -> bool:
    """y^2 + c z^2 = 0 describes the single point (1,0,0) iff p - c is a nonsquare."""
    return c % p != 0 and legendre_symbol(-c, p) == -1


def select_c(p: int) -> int:
    """Smallest valid pencil parameter: 1 if p = 3 (mod 4), else the least nonsquare."""
    check_prime(p)
    return next(c for c in range(1, p) if valid_c(p, c))


def diamond_relation(alpha: int, beta: int, p: int) -> bool:
    """O_alpha lies inside O_beta, decided by the quadratic character of -beta(beta-alpha)."""
    alpha = int(alpha) % p
    beta = int(beta) % p
    if alpha == 0 or beta == 0 or alpha == beta:
        raise PencilDomainError(f"need distinct nonzero indices, got ({alpha}, {beta})")
    s = legendre_symbol(-beta * (beta - alpha), p)
    return s == (-1 if p % 4 == 1 else 1)


def _diag(a: int, b: int, c: int) -> Matrix:
    return ((a, 0, 0), (0, b, 0), (0, 0, c))


@dataclass(frozen=True)
class RotationCollineation:
    """Map fixing O_beta and sending P to Q.

    ``matrix`` acts on PG(2,p).  When c is a nonsquare ``embedded`` holds the
    conjugated form over GF(p)(sqrt(c)) with entries a and sqrt(c)*b.
    """

    a: int
    b: int
    matrix: Collineation
    embedded: tuple[tuple[Fp2, ...], ...] | None = None


@dataclass(frozen=True)
class RelationTable:
    """Polygon lengths of diamond pairs: rows are the inner index alpha, columns the outer beta."""

    p: int
    c: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, alpha: int, beta: int) -> int | None:
        return self.entries.get((alpha, beta))

    def rows(self) -> list[list[int | None]]:
        r = range(1, self.p)
        return [[self.entries.get((a, b)) for b in r] for a in r]


class Pencil:
    """The special pencil of PG(2,p) through P=(1,0,0) and g: x=0.

    ``strict=False`` admits an invalid ``c`` so the partition check can be
    exercised on it; most other methods assume a valid parameter.
    """

    def __init__(self, p: int, c: int | None = None, *, strict: bool = True):
        self.p = check_prime(p)
        self.c = select_c(p) if c is None else c % p
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if strict and not valid_c(p, self.c):
            raise ValueError(f"c={c} is not a valid pencil parameter for p={p}")
        self._conics: dict[int, ConicMatrix] = {}

    def __repr__(self):
        return f"Pencil(p={self.p}, c={self.c})"

    @property
    def base_point(self) -> ProjPoint:
        return ProjPoint((1, 0, 0), self.p)

    def _check_index(self, k: int) -> int:
        k = int(k) % self.p
        if k == 0:
            raise PencilDomainError("conic index must lie in [1, p-1]")
        return k

    def conic(self, k: int) -> ConicMatrix:
        k = self._check_index(k)
        C = self._conics.get(k)
        if C is None:
            C = self._conics[k] = ConicMatrix(_diag(1, k, self.c * k), self.p)
        return C

    def conic_index(self, P: ProjPoint) -> int | None:
        """Index k with P on O_k, or None for P=(1,0,0) and points of g."""
        x, y, z = P.coords
        if x == 0:
            return None
        q = (y * y + self.c * z * z) % self.p
        if q == 0:
            return None
        return (-inv_mod(q, self.p)) % self.p

    def conic_points(self, k: int) -> list[ProjPoint]:
        """The points of O_k as sorted x=1 representatives."""
        k = self._check_index(k)
        p, c = self.p, self.c
        inv_ck = inv_mod(c * k, p)
        pts = set()
        for y in range(p):
            roots = sqrt_mod((-1 - k * y * y) * inv_ck, p)
            if roots is not None:
                for z in roots:
                    pts.add((1, y, z))
        return [ProjPoint._raw(t, p) for t in sorted(pts)]

    def verify_partition(self) -> bool:
        """The conics, the point (1,0,0) and the line x=0 partition the plane."""
        p, c = self.p, self.c
        total = 0
        for P in all_points(p):
            x, y, z = P.coords
            hits = 0
            if x == 0:
                hits += 1
            if (y * y + c * z * z) % p == 0:
                hits += 1
            for k in range(1, p):
                if (x * x + k * y * y + c * k * z * z) % p == 0:
                    hits += 1
            if hits != 1:
                return False
            total += 1
        return total == p * p + p + 1

    def diamond(self, alpha: int, beta: int) -> bool:
        return diamond_relation(alpha, beta, self.p)

    def diamond_pointwise(self, alpha: int, beta: int) -> bool:
        """Definition check: every point of O_beta is exterior to O_alpha."""
        if int(alpha) % self.p == int(beta) % self.p:
            raise PencilDomainError("alpha and beta must differ")
        inner = self.conic(alpha)
        return all(
            classify_point(inner, P) is PointKind.EXTERIOR for P in self.conic_points(beta)
        )

    def chain(self, alpha: int, beta: int) -> list[int]:
        """Closed chain alpha -> beta -> beta^2/alpha -> ... back to the start."""
        p = self.p
        alpha, beta = self._check_index(alpha), self._check_index(beta)
        if not self.diamond(alpha, beta):
            raise PencilDomainError(f"O_{alpha} does not lie inside O_{beta}")
        start = (alpha, beta)
        seq = [alpha]
        a, b = start
        while True:
            a, b = b, b * b * inv_mod(a, p) % p
            seq.append(a)
            if (a, b) == start:
                return seq

    @cached_property
    def diamond_table(self) -> dict[tuple[int, int], bool]:
        r = range(1, self.p)
        return {(a, b): self.diamond(a, b) for a in r for b in r if a != b}

    def transport(self, k: int, beta: int) -> Collineation:
        """Collineation taking the pair (O_k, O_1) to (O_{beta k}, O_beta)."""
        self._check_index(k)
        beta = self._check_index(beta)
        p, c = self.p, self.c
        if legendre_symbol(beta, p) == 1:
            r = sqrt_mod(beta, p)[0]
            return Collineation(_diag(1, inv_mod(r, p), inv_mod(r, p)), p)
        # M below is S^{-1} for the pencil with parameter c_aux; conjugating
        # by L = diag(1, 1, sqrt(c_aux/c)) carries it over to parameter c.
        if p % 4 == 3:
            s = next(
                s for s in range(1, p)
                if legendre_symbol(s, p) == 1 and legendre_symbol(beta - s, p) == 1
            )
            rs, rbs = sqrt_mod(s, p)[0], sqrt_mod(beta - s, p)[0]
            M = ((1, 0, 0), (0, rs, -rbs % p), (0, rbs, rs))
            c_aux = 1
        else:
            c_aux = next(
                x for x in range(1, p)
                if legendre_symbol(x, p) == -1 and legendre_symbol(beta - x, p) == 1
            )
            u = sqrt_mod(beta - c_aux, p)[0]
            M = ((1, 0, 0), (0, u, c_aux), (0, 1, -u % p))
        ell = sqrt_mod(c_aux * inv_mod(c, p), p)
        assert ell is not None, "c and c_aux must share their quadratic character"
        L = _diag(1, 1, ell[0])
        N = mat_mul(mat_mul(L, M, p), mat_inv(L, p), p)
        return Collineation(mat_inv(N, p), p)

    def rotation_collineation(self, beta: int, P: ProjPoint, Q: ProjPoint) -> RotationCollineation:
        """Collineation fixing O_beta and mapping P to Q."""
        beta = self._check_index(beta)
        p, c = self.p, self.c
        outer = self.conic(beta)
        for R in (P, Q):
            if not outer.contains(R) or R.coords[0] != 1:
                raise PencilDomainError(f"{R} is not a point of O_{beta}")
        _, p2, p3 = P.coords
        _, q2, q3 = Q.coords
        k = beta
        a = (-k * p2 * q2 + k * c * q3 * p3) % p
        b = (-k * q2 * p3 - k * q3 * p2) % p
        assert (a * a + c * b * b) % p == 1
        tau = Collineation(((1, 0, 0), (0, a, c * b % p), (0, b, -a % p)), p)
        embedded = None
        if legendre_symbol(c, p) == -1:
            one, zero = Fp2(1, 0, c, p), Fp2(0, 0, c, p)
            rb = Fp2(0, b, c, p)
            embedded = (
                (one, zero, zero),
                (zero, Fp2(a, 0, c, p), rb),
                (zero, rb, Fp2(-a, 0, c, p)),
            )
        return RotationCollineation(a, b, tau, embedded)
