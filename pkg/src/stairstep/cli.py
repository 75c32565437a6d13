"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .betti import (
    betti_csv,
    betti_json,
    graded_betti,
    poincare_series,
    render_betti_table,
    series_expand,
)
from .classify import classify
from .monomials import EmptyIdeal, ParseError, UnitIdeal, parse_ideal
from .oracle import (
    ExactRationals,
    FieldConfig,
    PrimeField,
    TruncationTooSmall,
    check_complex,
    check_exactness,
    check_minimality,
    compare_betti,
    default_max_degree,
    minimal_resolution_bruteforce,
)
from .resolution import Resolution, build_resolution, resolution_to_json
from .staircase import render_ascii, render_svg


def _parse_field(text: str) -> FieldConfig:
    if text == "q":
        return ExactRationals()
    if text.startswith("p:"):
        try:
            return PrimeField(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    raise argparse.ArgumentTypeError(f"field must be 'q' or 'p:PRIME', got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stairstep",
        description="Minimal free resolutions of k over k[x,y]/M "
        "for monomial ideals M in two variables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_field = os.environ.get("STAIRSTEP_FIELD", "q")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ideal", help='generators, e.g. "x^2*y, x*y^2" or "xy2,y4"')
        p.add_argument("--stages", type=int, default=6)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--field", type=_parse_field, default=default_field)
        p.add_argument("--graded", action="store_true")
        p.add_argument("--expand", type=int, default=None)
        p.add_argument("--svg", default=None)
        p.add_argument("--seed", type=int, default=0)
        return p

    add("classify", "print the construction regime of the ideal")
    add("resolve", "build and print the resolution through --stages")
    add("betti", "total Betti numbers, or the graded table with --graded")
    add("poincare", "Poincare-Betti series, expanded with --expand N")
    add("verify", "run complex, minimality and exactness checks")
    add("oracle", "brute-force Betti table, compared against the engine")
    add("staircase", "render the staircase diagram (ASCII or --svg PATH)")
    return parser


def _resolve_field(value) -> FieldConfig:
    return value if not isinstance(value, str) else _parse_field(value)


def _print_resolution_text(res: Resolution) -> None:
    print(f"M = {res.ring}  [{res.ideal_class.slug}]")
    print("ranks: " + " ".join(str(m.rank) for m in res.modules))
    for i, diff in enumerate(res.differentials, start=1):
        print(f"d{i}: F{i} -> F{i - 1}")
        grid = diff.dense_strings()
        widths = [max(len(grid[r][c]) for r in range(len(grid))) for c in range(len(grid[0]))] if grid and grid[0] else []
        for row in grid:
            print("  [ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]")


def _cmd_classify(args, ideal) -> int:
    print(classify(ideal).slug)
    return 0


def _cmd_resolve(args, ideal) -> int:
    res = build_resolution(ideal, args.stages)
    if args.format == "json":
        print(json.dumps(resolution_to_json(res), indent=2))
    elif args.format == "csv":
        print("stage,rank")
        for i, m in enumerate(res.modules):
            print(f"{i},{m.rank}")
    else:
        _print_resolution_text(res)
    return 0


def _cmd_betti(args, ideal) -> int:
    res = build_resolution(ideal, args.stages)
    table = graded_betti(res)
    if args.graded:
        if args.format == "json":
            print(json.dumps(betti_json(table)))
        elif args.format == "csv":
            print(betti_csv(table))
        else:
            print(render_betti_table(table))
    else:
        totals = table.totals()
        if args.format == "json":
            print(json.dumps({"totals": totals}))
        elif args.format == "csv":
            print("i,beta")
            for i, v in enumerate(totals):
                print(f"{i},{v}")
        else:
            print(" ".join(str(v) for v in totals))
    return 0


def _cmd_poincare(args, ideal) -> int:
    cls = classify(ideal)
    series = poincare_series(cls, ideal.num_generators)
    if args.expand is not None:
        coeffs = series_expand(series, args.expand)
        if args.format == "json":
            print(json.dumps({"series": str(series), "coefficients": coeffs}))
        else:
            print(" ".join(str(c) for c in coeffs))
    else:
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "numerator": list(series.numerator),
                        "denominator": list(series.denominator),
                        "display": str(series),
                    }
                )
            )
        else:
            print(str(series))
    return 0


def _cmd_verify(args, ideal) -> int:
    field = _resolve_field(args.field)
    max_degree = args.max_degree or default_max_degree(ideal, args.stages)
    res = build_resolution(ideal, args.stages + 1)
    report = check_complex(res)
    report.checks.extend(check_minimality(res).checks)
    report.checks.extend(check_exactness(res, args.stages, max_degree, field).checks)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        for c in report.failures():
            where = f"stage {c.stage}" + (f", degree {c.degree}" if c.degree is not None else "")
            print(f"FAIL {c.kind} at {where}: {c.detail}")
        print("verdict: " + ("pass" if report.verdict else "fail"))
    return 0 if report.verdict else 1


def _cmd_oracle(args, ideal) -> int:
    field = _resolve_field(args.field)
    max_degree = args.max_degree or default_max_degree(ideal, args.stages)
    oracle_table = minimal_resolution_bruteforce(ideal, args.stages, max_degree, field)
    engine_table = graded_betti(build_resolution(ideal, args.stages))
    diff = compare_betti(engine_table, oracle_table)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "oracle": betti_json(oracle_table),
                    "match": diff.is_empty,
                    "mismatches": [list(m) for m in diff.mismatches],
                }
            )
        )
    elif args.format == "csv":
        print(betti_csv(oracle_table))
    else:
        print(render_betti_table(oracle_table))
        if diff.is_empty:
            print("engine agreement: pass")
        else:
            for i, d, eng, orc in diff.mismatches:
                print(f"MISMATCH beta_({i},{d}): engine {eng} vs oracle {orc}")
            print("engine agreement: fail")
    return 0 if diff.is_empty else 1


def _cmd_staircase(args, ideal) -> int:
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(ideal))
        print(f"wrote {args.svg}")
    else:
        print(render_ascii(ideal))
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "resolve": _cmd_resolve,
    "betti": _cmd_betti,
    "poincare": _cmd_poincare,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "staircase": _cmd_staircase,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        ideal = parse_ideal(args.ideal)
    except (ParseError, EmptyIdeal, UnitIdeal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args, ideal)
    except TruncationTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
