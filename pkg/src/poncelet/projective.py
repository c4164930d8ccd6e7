"""Points, lines, conics and collineations of PG(2,p).

Homogeneous triples are stored as plain integers reduced mod p and scaled
so the first nonzero coordinate is 1.  Point sums (``point_sum``) act on the
x=1 representatives of points off the line x=0, then renormalize.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .field import Fp2, inv_mod, legendre_symbol, sqrt_mod

Triple = tuple[int, int, int]
Matrix = tuple[Triple, Triple, Triple]


class SingularConicError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class NotOnConicError(ValueError):
    pass


class LineKind(enum.Enum):
    TANGENT = "tangent"
    SECANT = "secant"
    EXTERNAL = "external"


class PointKind(enum.Enum):
    ON = "on"
    EXTERIOR = "exterior"
    INNER = "inner"


def normalize_triple(v: Sequence[int], p: int) -> Triple:
    x, y, z = (int(t) % p for t in v)
    lead = x or y or z
    if lead == 0:
        raise ValueError("(0,0,0) is not a projective point")
    if lead != 1:
        s = inv_mod(lead, p)
        x, y, z = x * s % p, y * s % p, z * s % p
    return (x, y, z)


class _Homogeneous:
    __slots__ = ("coords", "p")

    def __init__(self, coords: Sequence[int], p: int):
        object.__setattr__(self, "coords", normalize_triple(coords, p))
        object.__setattr__(self, "p", p)

    @classmethod
    def _raw(cls, coords: Triple, p: int):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coords", coords)
        object.__setattr__(obj, "p", p)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords and self.p == other.p

    def __lt__(self, other):
        return self.coords < other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords, self.p))

    def __repr__(self):
        return f"{type(self).__name__}{self.coords}"


class ProjPoint(_Homogeneous):
    __slots__ = ()


class ProjLine(_Homogeneous):
    __slots__ = ()


def cross(u: Sequence[int], v: Sequence[int], p: int) -> Triple:
    return (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )


def dot(u: Sequence[int], v: Sequence[int], p: int) -> int:
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p


def incident(P: ProjPoint, l: ProjLine) -> bool:
    return dot(P.coords, l.coords, P.p) == 0


def line_through(P: ProjPoint, Q: ProjPoint) -> ProjLine:
    if P == Q:
        raise ValueError("a line needs two distinct points")
    return ProjLine(cross(P.coords, Q.coords, P.p), P.p)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    if l == m:
        raise ValueError("identical lines have no unique meet")
    return ProjPoint(cross(l.coords, m.coords, l.p), l.p)


def all_points(p: int) -> Iterator[ProjPoint]:
    """All p^2+p+1 points in lexicographic order of canonical coordinates."""
    yield ProjPoint._raw((0, 0, 1), p)
    for z in range(p):
        yield ProjPoint._raw((0, 1, z), p)
    for y, z in product(range(p), repeat=2):
        yield ProjPoint._raw((1, y, z), p)


def all_lines(p: int) -> Iterator[ProjLine]:
    for P in all_points(p):
        yield ProjLine._raw(P.coords, p)


def points_on_line(l: ProjLine) -> list[ProjPoint]:
    U, V = _line_basis(l.coords, l.p)
    p = l.p
    pts = [ProjPoint(V, p)]
    for t in range(p):
        pts.append(ProjPoint(tuple((U[i] + t * V[i]) % p for i in range(3)), p))
    return pts


def point_sum(points: Iterable[ProjPoint]) -> ProjPoint:
    """Coordinatewise sum of x=1 representatives, renormalized.

    Raises ValueError when a summand lies on x=0 or the sum vanishes.
    """
    sx = sy = sz = 0
    p = None
    for P in points:
        if P.coords[0] != 1:
            raise ValueError(f"{P} has no x=1 representative")
        p = P.p
        sx += 1
        sy += P.coords[1]
        sz += P.coords[2]
    if p is None:
        raise ValueError("empty point sum")
    return ProjPoint((sx, sy, sz), p)


def mat_mul(A: Matrix, B: Matrix, p: int) -> Matrix:
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(3)) % p for j in range(3))
        for i in range(3)
    )


def mat_vec(A: Matrix, v: Sequence[int], p: int) -> Triple:
    return tuple((A[i][0] * v[0] + A[i][1] * v[1] + A[i][2] * v[2]) % p for i in range(3))


def transpose(A: Matrix) -> Matrix:
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def det3(A) -> object:
    """Determinant by cofactor expansion; works over any commutative ring."""
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def mat_inv(A: Matrix, p: int) -> Matrix:
    d = det3(A) % p
    if d == 0:
        raise SingularMatrixError("matrix is singular mod p")
    dinv = inv_mod(d, p)
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = A[r[0]][c[0]] * A[r[1]][c[1]] - A[r[0]][c[1]] * A[r[1]][c[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    # adjugate is the transposed cofactor matrix
    return tuple(tuple(cof[j][i] * dinv % p for j in range(3)) for i in range(3))


def normalize_matrix(A: Matrix, p: int) -> Matrix:
    """Scale so the first nonzero entry (row-major) is 1."""
    flat = [x % p for row in A for x in row]
    lead = next((x for x in flat if x), 0)
    if lead == 0:
        raise ValueError("zero matrix")
    s = inv_mod(lead, p)
    flat = [x * s % p for x in flat]
    return (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))


def _as_matrix(m, p: int) -> Matrix:
    return tuple(tuple(int(x) % p for x in row) for row in m)


@dataclass(frozen=True)
class ConicMatrix:
    """Symmetric 3x3 matrix of a quadratic form over GF(p)."""

    m: Matrix
    p: int

    def __post_init__(self):
        object.__setattr__(self, "m", _as_matrix(self.m, self.p))
        if any(self.m[i][j] != self.m[j][i] for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")

    @classmethod
    def diagonal(cls, a: int, b: int, c: int, p: int) -> ConicMatrix:
        return cls(((a, 0, 0), (0, b, 0), (0, 0, c)), p)

    @property
    def det(self) -> int:
        return det3(self.m) % self.p

    def is_regular(self) -> bool:
        return self.det != 0

    def form(self, u: Sequence[int], v: Sequence[int] | None = None) -> int:
        """Bilinear form u^T M v (quadratic form when v is omitted)."""
        v = u if v is None else v
        return dot(u, mat_vec(self.m, v, self.p), self.p)

    def contains(self, P: ProjPoint) -> bool:
        return self.form(P.coords) == 0

    def polar(self, P: ProjPoint) -> ProjLine:
        return ProjLine(mat_vec(self.m, P.coords, self.p), self.p)

    def points(self) -> list[ProjPoint]:
        """Exhaustive enumeration; used as an oracle and for small p."""
        return [P for P in all_points(self.p) if self.contains(P)]

    def normalized(self) -> Matrix:
        return normalize_matrix(self.m, self.p)

    def same_conic(self, other: ConicMatrix) -> bool:
        """Equality up to a nonzero scalar."""
        return self.p == other.p and self.normalized() == other.normalized()


def _line_basis(l: Triple, p: int) -> tuple[Triple, Triple]:
    a, b, c = l
    if c:
        return (c, 0, (-a) % p), (0, c, (-b) % p)
    if b:
        return (b, (-a) % p, 0), (0, 0, 1)
    return (0, 1, 0), (0, 0, 1)


def _require_regular(C: ConicMatrix) -> None:
    if not C.is_regular():
        raise SingularConicError("conic matrix is singular")


def intersect(C: ConicMatrix, l: ProjLine) -> list[ProjPoint]:
    """Points of C on l, found from the restricted binary quadratic form."""
    _require_regular(C)
    p = C.p
    U, V = _line_basis(l.coords, p)
    a, b, c = C.form(U), C.form(U, V), C.form(V)
    # a s^2 + 2 b s t + c t^2 = 0 on points sU + tV
    disc = (b * b - a * c) % p
    if legendre_symbol(disc, p) == -1:
        return []
    if a == 0:
        # t = 0 is a root; the other is 2bs + ct = 0
        roots = [(1, 0)]
        if b:
            roots.append(((-c) % p, (2 * b) % p))
    else:
        r = sqrt_mod(disc, p)[0]
        inv_a = inv_mod(a, p)
        roots = [(((-b + r) * inv_a) % p, 1), (((-b - r) * inv_a) % p, 1)]
    pts = []
    for s, t in roots:
        P = ProjPoint(tuple((s * U[i] + t * V[i]) % p for i in range(3)), p)
        if P not in pts:
            pts.append(P)
    return pts


def classify_line(C: ConicMatrix, l: ProjLine) -> LineKind:
    _require_regular(C)
    p = C.p
    U, V = _line_basis(l.coords, p)
    a, b, c = C.form(U), C.form(U, V), C.form(V)
    s = legendre_symbol(b * b - a * c, p)
    return (LineKind.TANGENT, LineKind.SECANT, LineKind.EXTERNAL)[s]


def classify_point(C: ConicMatrix, P: ProjPoint) -> PointKind:
    kind = classify_line(C, C.polar(P))
    return {
        LineKind.TANGENT: PointKind.ON,
        LineKind.SECANT: PointKind.EXTERIOR,
        LineKind.EXTERNAL: PointKind.INNER,
    }[kind]


def tangent_at(C: ConicMatrix, P: ProjPoint) -> ProjLine:
    _require_regular(C)
    if not C.contains(P):
        raise NotOnConicError(f"{P} is not on the conic")
    return C.polar(P)


@dataclass(frozen=True)
class Collineation:
    """The collinear map P -> S P for a regular matrix S over GF(p)."""

    s: Matrix
    p: int

    def __post_init__(self):
        object.__setattr__(self, "s", _as_matrix(self.s, self.p))
        if det3(self.s) % self.p == 0:
            raise SingularMatrixError("collineation matrix is singular")

    @classmethod
    def identity(cls, p: int) -> Collineation:
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), p)

    def __call__(self, P: ProjPoint) -> ProjPoint:
        return ProjPoint(mat_vec(self.s, P.coords, self.p), self.p)

    def __matmul__(self, other: Collineation) -> Collineation:
        return Collineation(mat_mul(self.s, other.s, self.p), self.p)

    def inverse(self) -> Collineation:
        return Collineation(mat_inv(self.s, self.p), self.p)

    def map_line(self, l: ProjLine) -> ProjLine:
        # lines transform by (S^T)^{-1}
        return ProjLine(mat_vec(transpose(mat_inv(self.s, self.p)), l.coords, self.p), self.p)

    def same_map(self, other: Collineation) -> bool:
        return normalize_matrix(self.s, self.p) == normalize_matrix(other.s, other.p)


def apply_collineation(S: Collineation, P: ProjPoint) -> ProjPoint:
    return S(P)


def conic_pushforward(S: Collineation, C: ConicMatrix) -> ConicMatrix:
    """The image conic (S^{-1})^T C S^{-1}."""
    Si = mat_inv(S.s, S.p)
    return ConicMatrix(mat_mul(transpose(Si), mat_mul(C.m, Si, S.p), S.p), S.p)


def fp2_mat_vec(A: Sequence[Sequence[Fp2]], v: Sequence[Fp2]) -> tuple[Fp2, Fp2, Fp2]:
    return tuple(A[i][0] * v[0] + A[i][1] * v[1] + A[i][2] * v[2] for i in range(3))
