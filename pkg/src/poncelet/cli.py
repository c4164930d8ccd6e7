"""The ``poncelet`` command line."""

from __future__ import annotations

import argparse
import io
import json
import sys
from importlib import resources

from . import __version__
from .algebra import (
    coefficients_by_doubling,
    coefficients_by_iteration,
    coefficients_by_polynomial,
    poncelet_polynomial,
    totient,
)
from .cayley import cayley_coefficients
from .field import check_prime
from .pencil import Pencil, PencilDomainError, valid_c
from .projective import ProjPoint
from .relations import relation_table, verify
from .tracer import check_contact_sums, check_sum_identities, trace

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PRIME = 2
EXIT_DIVISIBILITY = 3
EXIT_DIAMOND = 4
EXIT_START = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_schema() -> dict:
    text = resources.files("poncelet").joinpath("output.schema.json").read_text()
    return json.loads(text)


def _pencil(p: int, c: int | None) -> Pencil:
    try:
        check_prime(p)
    except ValueError as e:
        raise CliError(str(e), EXIT_PRIME) from None
    if c is not None and not valid_c(p, c):
        raise CliError(f"c={c} is not a valid pencil parameter for p={p}", EXIT_PRIME)
    return Pencil(p, c)


def _document(command: str, payload: dict, p=None, c=None) -> dict:
    return {
        "format": None,
        "metadata": {"p": p, "c": c, "command": command, "version": __version__},
        "payload": payload,
    }


# -- commands: each returns (document, csv rows, plain lines, exit code) ------


def cmd_table(p: int, c: int | None = None, oracle: bool = False):
    pencil = _pencil(p, c)
    table = relation_table(pencil, oracle=oracle)
    rows = table.rows()
    payload = {"oracle": oracle, "rows": rows}
    header = ["alpha"] + [str(b) for b in range(1, p)]
    csv_rows = [header] + [[str(a)] + ["" if v is None else str(v) for v in row] for a, row in zip(range(1, p), rows)]
    width = max(3, len(str(p)) + 1)
    plain = ["".ljust(width + 2) + "".join(f"O{b}".rjust(width + 1) for b in range(1, p))]
    for a, row in zip(range(1, p), rows):
        plain.append(f"O{a}".ljust(width + 2) + "".join(("" if v is None else str(v)).rjust(width + 1) for v in row))
    return _document("table", payload, p, pencil.c), csv_rows, plain, EXIT_OK


def cmd_coeffs(p: int, n: int, c: int | None = None):
    pencil = _pencil(p, c)
    if n < 3 or (p + 1) % n:
        raise CliError(f"n={n} must be at least 3 and divide p+1={p + 1}", EXIT_DIVISIBILITY)
    methods = {"polynomial": sorted(k.value for k in coefficients_by_polynomial(n, p))}
    if n % 2:
        methods["iteration"] = sorted(k.value for k in coefficients_by_iteration(n, p))
    elif n >= 6:
        methods["doubling"] = sorted(k.value for k in coefficients_by_doubling(n, p))
    methods["cayley"] = sorted(cayley_coefficients(n, p))
    coeffs = methods["polynomial"]
    agree = all(v == coeffs for v in methods.values())
    payload = {"n": n, "coefficients": coeffs, "methods": methods, "agree": agree}
    csv_rows = [["n", "k"]] + [[str(n), str(k)] for k in coeffs]
    plain = [f"n={n} p={p}: {{{', '.join(map(str, coeffs))}}}"]
    plain += [f"  {name}: {vals}" for name, vals in methods.items()]
    plain.append(f"  agree: {agree}")
    return _document("coeffs", payload, p, pencil.c), csv_rows, plain, EXIT_OK if agree else EXIT_MISMATCH


def cmd_poly(n: int):
    if n < 3:
        raise CliError("n must be at least 3", EXIT_DIVISIBILITY)
    P = poncelet_polynomial(n)
    payload = {"n": n, "degree": P.degree, "half_totient": totient(n) // 2, "coefficients": P.to_strings()}
    csv_rows = [["degree", "coefficient"]] + [[str(i), s] for i, s in enumerate(P.to_strings())]
    plain = [f"P_{n}(k) = {str(P).replace('x', 'k')}", f"degree {P.degree} = phi({n})/2"]
    return _document("poly", payload), csv_rows, plain, EXIT_OK


def _parse_start(text: str, p: int) -> ProjPoint:
    try:
        coords = tuple(int(t) for t in text.split(","))
        if len(coords) != 3:
            raise ValueError
        return ProjPoint(coords, p)
    except ValueError:
        raise CliError(f"cannot read a projective point from {text!r}", EXIT_START) from None


def cmd_trace(p: int, alpha: int, beta: int, start: str | None = None, c: int | None = None):
    pencil = _pencil(p, c)
    try:
        if not pencil.diamond(alpha, beta):
            raise CliError(f"O_{alpha} does not lie inside O_{beta}", EXIT_DIAMOND)
    except PencilDomainError as e:
        raise CliError(str(e), EXIT_DIAMOND) from None
    if start is None:
        B0 = pencil.conic_points(beta)[0]
    else:
        B0 = _parse_start(start, p)
        if B0.coords[0] != 1 or not pencil.conic(beta).contains(B0):
            raise CliError(f"{B0} is not a point of O_{beta}", EXIT_START)
    poly = trace(pencil, alpha, beta, B0)
    checks = {"sum_identities": check_sum_identities(poly), "contact_sums": check_contact_sums(pencil, poly)}
    payload = {
        "alpha": alpha % p,
        "beta": beta % p,
        "n": poly.n,
        "start": list(B0.coords),
        "vertices": [list(v.coords) for v in poly.vertices],
        "contacts": [list(a.coords) for a in poly.contacts],
        "checks": checks,
    }
    csv_rows = [["i", "bx", "by", "bz", "ax", "ay", "az"]]
    for i, (v, a) in enumerate(zip(poly.vertices, poly.contacts)):
        csv_rows.append([str(i)] + [str(x) for x in v.coords + a.coords])
    plain = [f"(O_{alpha % p}, O_{beta % p}) in PG(2,{p}), c={pencil.c}: n={poly.n}"]
    for i, (v, a) in enumerate(zip(poly.vertices, poly.contacts)):
        plain.append(f"  B{i + 1}={v.coords}  A{i + 1}={a.coords}")
    plain.append(f"  checks: {checks}")
    code = EXIT_OK if all(checks.values()) else EXIT_MISMATCH
    return _document("trace", payload, p, pencil.c), csv_rows, plain, code


def cmd_verify(p_max: int, n_max: int):
    report = verify(p_max, n_max)
    cells = [
        {
            "p": c.p,
            "n": c.n,
            "tracer": c.tracer,
            "polynomial": c.polynomial,
            "iteration": c.iteration,
            "cayley": c.cayley,
            "pass": c.passed,
        }
        for c in report.cells
    ]
    failed = sum(not c.passed for c in report.cells)
    census = [{"p": p, "pass": ok} for p, ok in sorted(report.census_ok.items())]
    summary = {"cells": len(cells), "failed": failed, "census_failed": sum(not x["pass"] for x in census), "pass": report.passed}
    payload = {"p_max": p_max, "n_max": n_max, "cells": cells, "census": census, "summary": summary}

    def join(v):
        return "" if v is None else ";".join(map(str, v))

    csv_rows = [["p", "n", "tracer", "polynomial", "iteration", "cayley", "pass"]]
    for c in cells:
        csv_rows.append([str(c["p"]), str(c["n"]), join(c["tracer"]), join(c["polynomial"]),
                         join(c["iteration"]), join(c["cayley"]), str(int(c["pass"]))])
    plain = [f"{'PASS' if c['pass'] else 'FAIL'} p={c['p']} n={c['n']} {c['polynomial']}" for c in cells]
    plain += [f"FAIL census p={x['p']}" for x in census if not x["pass"]]
    plain.append(f"{len(cells) - failed}/{len(cells)} cells passed")
    return _document("verify", payload), csv_rows, plain, EXIT_OK if report.passed else EXIT_MISMATCH


# -- output ----------------------------------------------------------------------


def render(fmt: str, doc: dict, csv_rows, plain) -> str:
    if fmt == "json":
        doc = dict(doc, format="json")
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        return "".join(",".join(row) + "\n" for row in csv_rows)
    return "\n".join(plain) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--c", type=int, default=None, help="pencil parameter (default: smallest valid)")

    parser = argparse.ArgumentParser(prog="poncelet", description="Poncelet polygons in PG(2,p).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="relation table of the pencil")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--oracle", action="store_true", help="trace every pair instead of using P_n")

    co = sub.add_parser("coeffs", parents=[common], help="Poncelet coefficients for n-gons")
    co.add_argument("--p", type=int, required=True)
    co.add_argument("--n", type=int, required=True)

    po = sub.add_parser("poly", parents=[common], help="Poncelet polynomial P_n")
    po.add_argument("--n", type=int, required=True)

    tr = sub.add_parser("trace", parents=[common], help="trace one polygon")
    tr.add_argument("--p", type=int, required=True)
    tr.add_argument("--alpha", type=int, required=True)
    tr.add_argument("--beta", type=int, default=1)
    tr.add_argument("--start", default=None, help="start vertex x,y,z on O_beta")

    ve = sub.add_parser("verify", parents=[common], help="cross-check all methods")
    ve.add_argument("--p-max", type=int, default=31)
    ve.add_argument("--n-max", type=int, default=12)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.command == "table":
            result = cmd_table(args.p, args.c, args.oracle)
        elif args.command == "coeffs":
            result = cmd_coeffs(args.p, args.n, args.c)
        elif args.command == "poly":
            result = cmd_poly(args.n)
        elif args.command == "trace":
            result = cmd_trace(args.p, args.alpha, args.beta, args.start, args.c)
        else:
            result = cmd_verify(args.p_max, args.n_max)
    except CliError as e:
        print(f"poncelet: {e}", file=sys.stderr)
        return e.code
    doc, csv_rows, plain, code = result
    out.write(render(args.format, doc, csv_rows, plain))
    return code


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


def capture(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and return (exit code, stdout text)."""
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()
