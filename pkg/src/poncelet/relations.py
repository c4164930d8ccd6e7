"""Relation tables for a whole plane and the cross-method verification sweep."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    coefficients_by_iteration,
    coefficients_by_polynomial,
    polygon_lengths,
    totient,
)
from .cayley import cayley_coefficients
from .field import inv_mod, odd_primes
from .pencil import Pencil, RelationTable
from .tracer import census, verify_porism


def coefficient_lengths(p: int) -> dict[int, int]:
    """k -> n for every Poncelet coefficient k of (O_k, O_1), from the roots of P_n."""
    out = {}
    for n in polygon_lengths(p):
        for k in coefficients_by_polynomial(n, p):
            out[k.value] = n
    return out


def relation_table(pencil: Pencil, oracle: bool = False) -> RelationTable:
    """Side counts for every diamond pair; rows are the inner conic.

    (O_alpha, O_beta) is the image of (O_k, O_1) with k = alpha/beta under a
    collineation, so the entry is read off the coefficient k.  With
    ``oracle`` every entry is traced instead.
    """
    p = pencil.p
    lengths = None if oracle else coefficient_lengths(p)
    entries = {}
    for beta in range(1, p):
        ib = inv_mod(beta, p)
        for alpha in range(1, p):
            if alpha == beta or not pencil.diamond(alpha, beta):
                continue
            if oracle:
                entries[(alpha, beta)] = verify_porism(pencil, alpha, beta)
            else:
                entries[(alpha, beta)] = lengths[alpha * ib % p]
    return RelationTable(p, pencil.c, entries)


@dataclass
class Cell:
    """One (p, n) cell of the verification matrix."""

    p: int
    n: int
    tracer: list[int]
    polynomial: list[int]
    iteration: list[int] | None
    cayley: list[int]
    passed: bool


@dataclass
class VerifyReport:
    cells: list[Cell] = field(default_factory=list)
    census_ok: dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells) and all(self.census_ok.values())


def verify_prime(p: int, n_max: int) -> tuple[list[Cell], bool]:
    pencil = Pencil(p)
    groups = census(pencil, 1)
    # census sizes: phi(n)/2 for each n and (p-1)/2 in total
    sizes_ok = sum(len(g) for g in groups.values()) == (p - 1) // 2 and all(
        len(groups.get(n, ())) == totient(n) // 2 for n in polygon_lengths(p)
    )
    cells = []
    for n in polygon_lengths(p):
        if n > n_max:
            continue
        traced = sorted(groups.get(n, ()))
        poly = sorted(k.value for k in coefficients_by_polynomial(n, p))
        it = sorted(k.value for k in coefficients_by_iteration(n, p)) if n % 2 else None
        cay = sorted(cayley_coefficients(n, p))
        ok = traced == poly == cay and (it is None or it == poly) and len(poly) == totient(n) // 2
        cells.append(Cell(p, n, traced, poly, it, cay, ok))
    return cells, sizes_ok


def verify(p_max: int, n_max: int) -> VerifyReport:
    """Compare every method on each cell (p, n) with p <= p_max and n <= n_max."""
    report = VerifyReport()
    for p in odd_primes(p_max):
        cells, ok = verify_prime(p, n_max)
        report.cells.extend(cells)
        report.census_ok[p] = ok
    return report
