"""Geometric construction of Poncelet polygons for pencil pairs (O_alpha, O_beta)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .field import inv_mod, sqrt_mod
from .pencil import Pencil, PencilDomainError
from .projective import ProjPoint, line_through, point_sum, tangent_at


class PorismViolation(AssertionError):
    """Traces of one conic pair closed with different lengths."""


@dataclass(frozen=True)
class Polygon:
    """Vertices B_i on O_beta; side B_i B_{i+1} touches O_alpha at contacts[i]."""

    alpha: int
    beta: int
    vertices: tuple[ProjPoint, ...]
    contacts: tuple[ProjPoint, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def p(self) -> int:
        return self.vertices[0].p


def _require_pair(pencil: Pencil, alpha: int, beta: int, P: ProjPoint) -> None:
    if not pencil.diamond(alpha, beta):
        raise PencilDomainError(f"O_{alpha} does not lie inside O_{beta}")
    if P.p != pencil.p or P.coords[0] != 1 or not pencil.conic(beta).contains(P):
        raise PencilDomainError(f"{P} is not a point of O_{beta}")


def _contacts(p: int, c: int, alpha: int, beta: int, P2: int, P3: int) -> list[tuple[int, int, int]]:
    ia = inv_mod(alpha, p)
    root = sqrt_mod(ia * ia * (-inv_mod(c, p) * beta) * (beta - alpha), p)
    assert root is not None, "radicand must be a square for a diamond pair"
    r = root[0]
    z_mid = ia * beta * P3
    if P2 != 0:
        iP2 = inv_mod(P2, p)
        pts = []
        for sign in (1, -1):
            z = (z_mid + sign * P2 * r) % p
            pts.append((1, iP2 * (-ia - c * P3 * z) % p, z))
    else:
        z = z_mid % p
        ys = sqrt_mod(-ia - c * z * z, p)
        assert ys is not None
        pts = [(1, y, z) for y in ys]
    return sorted(pts)


def contact_points(pencil: Pencil, alpha: int, beta: int, P: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
    """Contact points on O_alpha of the two tangents through P on O_beta.

    Closed formulas: z = beta P3/alpha +- P2 sqrt((-beta/c)(beta-alpha))/alpha,
    then y from the tangent condition (or from the conic when P2 = 0).
    """
    _require_pair(pencil, alpha, beta, P)
    p = pencil.p
    A1, A2 = _contacts(p, pencil.c, int(alpha) % p, int(beta) % p, P.coords[1], P.coords[2])
    return ProjPoint._raw(A1, p), ProjPoint._raw(A2, p)


def _second_intersection(p: int, c: int, beta: int, B, A) -> tuple[int, int, int]:
    """Other point of O_beta on the line BA, where B is on O_beta and A is not."""
    # Q(B + mu A) = 2 mu <B,A> + mu^2 Q(A) because Q(B) = 0
    qa = (1 + beta * A[1] * A[1] + c * beta * A[2] * A[2]) % p
    bab = (1 + beta * B[1] * A[1] + c * beta * B[2] * A[2]) % p
    assert qa != 0 and bab != 0, "tangent of O_alpha touching O_beta"
    mu = -2 * bab * inv_mod(qa, p)
    s = inv_mod(1 + mu, p)
    return (1, (B[1] + mu * A[1]) * s % p, (B[2] + mu * A[2]) * s % p)


def trace(pencil: Pencil, alpha: int, beta: int, start: ProjPoint) -> Polygon:
    """Follow tangents of O_alpha around O_beta from ``start`` until it closes.

    The first side uses the contact point with the smaller canonical
    coordinates; afterwards each vertex leaves along its other tangent.
    """
    _require_pair(pencil, alpha, beta, start)
    p, c = pencil.p, pencil.c
    alpha = int(alpha) % p
    beta = int(beta) % p
    B0 = start.coords
    vertices = [B0]
    contacts = []
    A = _contacts(p, c, alpha, beta, B0[1], B0[2])[0]
    B = B0
    for _ in range(p + 2):
        contacts.append(A)
        B = _second_intersection(p, c, beta, B, A)
        if B == B0:
            return Polygon(
                alpha,
                beta,
                tuple(ProjPoint._raw(v, p) for v in vertices),
                tuple(ProjPoint._raw(a, p) for a in contacts),
            )
        vertices.append(B)
        A1, A2 = _contacts(p, c, alpha, beta, B[1], B[2])
        A = A2 if A1 == A else A1
    raise PorismViolation(f"trace from {start} did not close within p+1 steps")


def verify_porism(pencil: Pencil, alpha: int, beta: int) -> int:
    """Trace from every point of O_beta and return the common side count."""
    lengths = {trace(pencil, alpha, beta, B).n for B in pencil.conic_points(beta)}
    if len(lengths) != 1:
        raise PorismViolation(f"(O_{alpha}, O_{beta}) closes with lengths {sorted(lengths)}")
    return lengths.pop()


def check_sum_identities(poly: Polygon) -> bool:
    """Vertex and contact sums equal (1,0,0); opposite vertices of even polygons also sum to it."""
    origin = (1, 0, 0)
    try:
        if point_sum(poly.vertices).coords != origin:
            return False
        if point_sum(poly.contacts).coords != origin:
            return False
        n = poly.n
        if n % 2 == 0:
            if point_sum(poly.contacts[0::2]).coords != origin:
                return False
            if point_sum(poly.contacts[1::2]).coords != origin:
                return False
            h = n // 2
            for i in range(h):
                if point_sum((poly.vertices[i], poly.vertices[i + h])).coords != origin:
                    return False
    except ValueError:
        # a vanishing sum is not a point at all
        return False
    return True


def check_contact_sums(pencil: Pencil, poly: Polygon) -> bool:
    """Each contact A_i is B_i + B_{i+1} and the side B_i B_{i+1} is the tangent at A_i."""
    inner = pencil.conic(poly.alpha)
    n = poly.n
    for i in range(n):
        B, B_next, A = poly.vertices[i], poly.vertices[(i + 1) % n], poly.contacts[i]
        if point_sum((B, B_next)) != A:
            return False
        if not inner.contains(A) or line_through(B, B_next) != tangent_at(inner, A):
            return False
    return True


def census(pencil: Pencil, beta: int) -> dict[int, set[int]]:
    """Group the conics inside O_beta by the length of their Poncelet polygons."""
    groups: dict[int, set[int]] = defaultdict(set)
    for alpha in range(1, pencil.p):
        if alpha != int(beta) % pencil.p and pencil.diamond(alpha, beta):
            groups[verify_porism(pencil, alpha, beta)].add(alpha)
    return dict(sorted(groups.items()))
