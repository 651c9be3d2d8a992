"""Command-line front end: parameter tables, single GHW queries, Veronese checks.

Exit codes: 0 success, 2 fixture mismatch or failed check, 3 guard
violation, 4 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import GuardViolation, RmghwError
from .evalcode import build_code, dumps_code, verify_veronese_theorem
from .oracle import (
    MAX_ENUM_CLASSES,
    MAX_SUBSET_LENGTH,
    GhwReport,
    ghw_subset_rank,
    min_distance_enum,
    projective_class_count,
    support,
)
from .tables import FIXTURES, KINDS, CodeParams, Row, build_table, check_fixture, closed_form, footprint_weight
from .varieties import dumps_points

EXIT_OK, EXIT_MISMATCH, EXIT_GUARD, EXIT_USAGE = 0, 2, 3, 4
SCHEMA = 1


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_factors(text: str) -> tuple[tuple[int, ...], ...]:
    """``"0,1,2;1,3"`` -> ((0, 1, 2), (1, 3)); elements use the integer encoding."""
    try:
        return tuple(tuple(int(a) for a in part.split(",") if a.strip()) for part in text.split(";") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad factor list {text!r}; expected e.g. 0,1,2;1,3")


def dumps_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _add_code_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--q", type=int, required=required, help="field order (a prime power)")
    p.add_argument("--s", type=int, required=required, help="number of homogeneous coordinates")
    p.add_argument("--kind", choices=KINDS, required=required)
    p.add_argument("--factors", type=parse_factors, default=(), help="cartesian factor sets, e.g. 0,1,2;0,1,2")
    p.add_argument("--k", type=int, default=1, help="Veronese degree (1 = no embedding)")


def _params(args) -> CodeParams:
    try:
        return CodeParams(args.q, args.s, args.kind, args.factors, args.k)
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(RmghwError):
    pass


# -- table --------------------------------------------------------------------


def _code_header(p: CodeParams, m: int) -> dict:
    from .gf import prime_power

    return {"q": p.q, "e": prime_power(p.q)[1], "s": p.s, "kind": p.kind, "k": p.k, "m": m}


def table_json(p: CodeParams, rows: Sequence[Row], fixture: str | None = None) -> dict:
    out = {
        "schema": SCHEMA,
        "code": _code_header(p, rows[0].m if rows else 0),
        "rows": [
            {
                "d": row.d,
                "m": row.m,
                "H": row.H,
                "delta": [[r, c.value] for r, c in sorted(row.delta.items())],
                "method": [[r, c.method] for r, c in sorted(row.delta.items())],
            }
            for row in rows
        ],
    }
    if fixture:
        out["fixture"] = fixture
    return out


def _table_lines(rows: Sequence[Row]) -> list[list[str]]:
    """Transposed layout: one line per quantity, one column per degree."""
    rmax = max((max(row.delta) for row in rows if row.delta), default=0)
    fmt = lambda v: "-" if v is None else str(v)
    lines = [["d"] + [str(row.d) for row in rows], ["m"] + [str(row.m) for row in rows], ["H"] + [str(row.H) for row in rows]]
    for r in range(1, rmax + 1):
        lines.append([f"delta_{r}"] + [fmt(row.delta[r].value) for row in rows])
    for r in range(1, rmax + 1):
        lines.append([f"method_{r}"] + [row.delta[r].method for row in rows])
    return lines


def table_csv(rows: Sequence[Row]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(_table_lines(rows))
    return buf.getvalue()


def table_pretty(rows: Sequence[Row]) -> str:
    lines = _table_lines(rows)
    widths = [max(len(line[j]) for line in lines) for j in range(len(lines[0]))]
    return "".join(" ".join(cell.rjust(w) for cell, w in zip(line, widths)) + "\n" for line in lines)


def cmd_table(args) -> int:
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise UsageError(f"unknown fixture {args.fixture!r}; choose from {sorted(FIXTURES)}")
        f = FIXTURES[args.fixture]
        p = f.params
        degrees = range(1, f.dmax + 1)
        rmax = f.rmax
    else:
        if args.q is None or args.s is None or args.kind is None:
            raise UsageError("give a fixture name or --q, --s and --kind")
        p = _params(args)
        degrees = None
        if args.dmax is not None:
            degrees = range(args.dmin, args.dmax + 1)
        rmax = args.rmax
    if args.check and not args.fixture:
        raise UsageError("--check needs a fixture")
    rows = build_table(p, degrees, rmax, args.method)
    if args.format == "json":
        sys.stdout.write(dumps_json(table_json(p, rows, args.fixture)))
    elif args.format == "csv":
        sys.stdout.write(table_csv(rows))
    else:
        sys.stdout.write(table_pretty(rows))
    if args.check:
        bad = check_fixture(args.fixture, rows)
        for line in bad:
            print(f"mismatch: {line}", file=sys.stderr)
        if bad:
            return EXIT_MISMATCH
        print(f"{args.fixture}: all cells match", file=sys.stderr)
    return EXIT_OK


# -- ghw ----------------------------------------------------------------------


def _oracle(C, r: int) -> tuple[int, str, list[int]]:
    if r > C.kappa:
        raise UsageError(f"r={r} exceeds the dimension {C.kappa}")
    if C.m <= MAX_SUBSET_LENGTH:
        w, basis = ghw_subset_rank(C, r)
        return w, "SubsetRank", sorted(support(basis))
    if r == 1 and projective_class_count(C.field.q, C.kappa) <= MAX_ENUM_CLASSES:
        w, word = min_distance_enum(C)
        return w, "CodewordEnum", [i for i, x in enumerate(word) if x]
    raise GuardViolation(f"no oracle covers r={r} on a [{C.m}, {C.kappa}] code")


def cmd_ghw(args) -> int:
    p = _params(args)
    C = build_code(p.point_set(), args.d)
    code = C.describe()
    code["kind"] = p.kind
    code["k"] = p.k
    report = GhwReport(code, {}, {})
    r = args.r
    if args.method == "formula":
        report.weights[r] = closed_form(p, args.d, r)
        report.method[r] = "ClosedForm"
    elif args.method == "footprint":
        v = footprint_weight(p, args.d, r)
        if v is None:
            raise UsageError(f"no footprint description for kind {p.kind!r} at d={args.d}, r={r}")
        report.weights[r] = v
        report.method[r] = "Footprint"
    elif args.method == "oracle":
        w, tag, supp = _oracle(C, r)
        report.weights[r], report.method[r], report.witness_support[r] = w, tag, supp
    else:
        found = {}
        try:
            found["ClosedForm"] = closed_form(p, args.d, r)
        except RmghwError:
            v = footprint_weight(p, args.d, r)
            if v is not None:
                found["Footprint"] = v
        try:
            w, tag, supp = _oracle(C, r)
            found[tag] = w
            report.witness_support[r] = supp
        except GuardViolation:
            pass
        if not found:
            raise GuardViolation(f"no method applies to r={r} on a [{C.m}, {C.kappa}] code")
        values = set(found.values())
        report.weights[r] = next(iter(values))
        out = report.to_json()
        out["method"] = sorted(found)
        out["methods"] = [[r, tag] for tag in sorted(found)]
        out["agree"] = len(values) == 1
        sys.stdout.write(dumps_json(out))
        if len(values) != 1:
            print(f"methods disagree: {found}", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    sys.stdout.write(dumps_json(report.to_json()))
    return EXIT_OK


# -- verify-veronese / build --------------------------------------------------


def cmd_verify_veronese(args) -> int:
    if args.k < 1 or args.d < 1:
        raise UsageError("need --k >= 1 and --d >= 1")
    base = CodeParams(args.q, args.s, args.kind, args.factors)
    rep = verify_veronese_theorem(base.base_set(), args.k, args.d)
    out = {"schema": SCHEMA, "code": {"q": args.q, "s": args.s, "kind": args.kind}, **rep.as_dict()}
    sys.stdout.write(dumps_json(out))
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_build(args) -> int:
    p = _params(args)
    X = p.point_set()
    if args.emit == "points":
        sys.stdout.write(dumps_points(X))
        return EXIT_OK
    if args.d is None:
        raise UsageError("--emit matrix needs --d")
    sys.stdout.write(dumps_code(build_code(X, args.d)))
    return EXIT_OK


def make_parser() -> ArgumentParser:
    ap = ArgumentParser(prog="rmghw", description="Reed-Muller-type codes: parameters and generalized Hamming weights.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    t = sub.add_parser("table", help="H and delta_r per degree, or a reference fixture")
    t.add_argument("fixture", nargs="?", help=f"one of {', '.join(sorted(FIXTURES))}")
    t.add_argument("--check", action="store_true", help="compare every cell with the reference table")
    t.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    _add_code_args(t, required=False)
    t.add_argument("--dmin", type=int, default=1)
    t.add_argument("--dmax", type=int, help="default: the regularity")
    t.add_argument("--rmax", type=int, default=1)
    t.add_argument("--method", choices=("auto", "formula", "oracle", "footprint"), default="auto")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("ghw", help="a single delta_r")
    _add_code_args(g)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--method", choices=("auto", "oracle", "formula", "footprint"), default="auto")
    g.set_defaults(func=cmd_ghw)

    v = sub.add_parser("verify-veronese", help="check C_X(kd) against the Veronese code of degree d")
    _add_code_args(v)
    v.add_argument("--d", type=int, required=True)
    v.set_defaults(func=cmd_verify_veronese)

    b = sub.add_parser("build", help="emit a point set or a generator matrix")
    _add_code_args(b)
    b.add_argument("--d", type=int)
    b.add_argument("--emit", choices=("matrix", "points"), default="matrix")
    b.set_defaults(func=cmd_build)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except RmghwError as exc:
        print(f"rmghw: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
