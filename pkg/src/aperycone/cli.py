"""Command line front end.

Subcommands:

  apery GENS...     Apery set and the order of each element
  table GENS...     Apery table rows 0 .. r
  ladders GENS...   landing structure of every nonzero column
  cone GENS...      tangent cone decomposition and verdicts
  hilbert GENS...   Hilbert series numerator and function values
  family NAME P     closed form data for a family member
  verify ...        cross checks against the brute force oracle

Every subcommand takes --json for machine readable output; the JSON uses
integers only and stable key order, so parsing and re-rendering it with
the same two-space indent is byte identical.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import NumericalSemigroup, apery_set, new_semigroup, order
from .errors import NotAFamilyError, SemigroupError
from .families import (
    ArslanParams,
    BresinskyParams,
    arslan,
    bresinsky,
    detect_family,
    family_apery_closed_form,
    family_block_layout,
    family_orders_closed_form,
    family_table_closed_form,
    order_census_closed_form,
)
from .ladder import (
    cone_decomposition,
    hilbert_function_from_series,
    hilbert_series,
    is_cohen_macaulay,
    is_free,
    ladder_profile,
)
from .oracle import full_verify
from .table import apery_table

__all__ = ["OutputDocument", "run", "main"]


@dataclass(frozen=True)
class OutputDocument:
    """What a subcommand prints: the format tag and the rendered payload."""

    format: str  # "text" or "json"
    payload: str


class _UsageError(Exception):
    pass


def _ints(seq) -> str:
    return " ".join(str(v) for v in seq)


def _matrix_lines(rows, indent: str = "  ") -> list[str]:
    width = max(len(str(v)) for row in rows for v in row)
    return [indent + " ".join(f"{v:>{width}}" for v in row) for row in rows]


def _columns_to_rows(columns: list[list[int]]) -> list[list[int]]:
    return [list(row) for row in zip(*columns)]


def _base_payload(S: NumericalSemigroup) -> dict:
    return {"generators": list(S.generators), "multiplicity": S.multiplicity}


def _base_lines(S: NumericalSemigroup) -> list[str]:
    return [f"generators: {_ints(S.generators)}", f"multiplicity: {S.multiplicity}"]


def _cmd_apery(args):
    S = new_semigroup(args.generators)
    modulus = args.apery_rep if args.apery_rep is not None else None
    ap = apery_set(S, modulus)
    orders = [order(S, w) for w in ap.elements]
    payload = _base_payload(S)
    payload["apery"] = {
        "modulus": ap.modulus,
        "elements": list(ap.elements),
        "orders": orders,
    }
    lines = _base_lines(S)
    lines.append(f"apery set modulo {ap.modulus}:")
    lines.append("  element  order")
    for w, o in zip(ap.elements, orders):
        lines.append(f"  {w:>7}  {o:>5}")
    return payload, lines, 0


def _block_section(payload_blocks: list[dict]) -> list[str]:
    lines = ["blocks:"]
    for block in payload_blocks:
        lines.append(f"  {block['name']}:")
        lines.extend(_matrix_lines(_columns_to_rows(block["columns"]), indent="    "))
    return lines


def _cmd_table(args):
    S = new_semigroup(args.generators)
    t = apery_table(S)
    payload = _base_payload(S)
    payload["reduction_number"] = t.reduction_number
    payload["table"] = [list(row) for row in t.rows]
    lines = _base_lines(S)
    lines.append(f"reduction number: {t.reduction_number}")
    if args.paper_order:
        params = detect_family(S)
        if params is None:
            raise NotAFamilyError(
                "--paper-order applies only to Bresinsky or Arslan family members"
            )
        col_of = {w: i for i, w in enumerate(t.column_keys)}
        blocks = [
            {"name": name, "columns": [list(t.column(col_of[w])) for w in keys]}
            for name, keys in family_block_layout(params)
        ]
        payload["blocks"] = blocks
        lines.extend(_block_section(blocks))
    else:
        lines.append("apery table:")
        lines.extend(_matrix_lines(t.rows))
    return payload, lines, 0


def _cmd_ladders(args):
    S = new_semigroup(args.generators)
    t = apery_table(S)
    profiles = []
    for i in range(1, len(t.column_keys)):
        prof = ladder_profile(t, i)
        profiles.append(
            {
                "column": i,
                "key": prof.column_key,
                "values": list(prof.values),
                "landings": [[l.start, l.end] for l in prof.landings],
                "p": prof.p,
                "d": prof.d,
                "b": list(prof.b_list),
                "c": list(prof.c_list),
            }
        )
    payload = _base_payload(S)
    payload["reduction_number"] = t.reduction_number
    payload["profiles"] = profiles
    lines = _base_lines(S)
    lines.append(f"reduction number: {t.reduction_number}")
    for prof in profiles:
        lines.append(f"column {prof['column']} (key {prof['key']}):")
        lines.append(f"  values: {_ints(prof['values'])}")
        landings = " ".join(f"{s}..{e}" for s, e in prof["landings"])
        lines.append(f"  landings: {landings}")
        b = _ints(prof["b"]) if prof["b"] else "-"
        c = _ints(prof["c"]) if prof["c"] else "-"
        lines.append(f"  p: {prof['p']}  d: {prof['d']}  b: {b}  c: {c}")
    return payload, lines, 0


def _cmd_cone(args):
    S = new_semigroup(args.generators)
    dec = cone_decomposition(S)
    free = not dec.torsion_summands
    payload = _base_payload(S)
    payload["decomposition"] = {
        "free_shifts": list(dec.free_shifts),
        "torsion": [list(pair) for pair in dec.torsion_summands],
    }
    payload["free"] = free
    payload["cohen_macaulay"] = free
    lines = _base_lines(S)
    lines.append(f"free shifts: {_ints(dec.free_shifts)}")
    if dec.torsion_summands:
        pairs = " ".join(f"({b}, {c})" for b, c in dec.torsion_summands)
        lines.append(f"torsion (shift, exponent): {pairs}")
    else:
        lines.append("torsion (shift, exponent): none")
    lines.append(f"free over the fiber cone: {'yes' if free else 'no'}")
    lines.append(f"cohen-macaulay tangent cone: {'yes' if free else 'no'}")
    return payload, lines, 0


def _cmd_hilbert(args):
    S = new_semigroup(args.generators)
    t = apery_table(S)
    dec = cone_decomposition(S)
    hs = hilbert_series(dec)
    r = t.reduction_number
    values = [hilbert_function_from_series(hs, n) for n in range(r + 5)]
    free = not dec.torsion_summands
    payload = _base_payload(S)
    payload["reduction_number"] = r
    payload["hilbert"] = {"numerator": list(hs.numerator), "values": values}
    payload["cohen_macaulay"] = free
    lines = _base_lines(S)
    lines.append(f"reduction number: {r}")
    lines.append(f"series numerator coefficients: {_ints(hs.numerator)}")
    lines.append("series denominator: 1 - x")
    lines.append(f"hilbert function values: {_ints(values)}")
    lines.append(f"cohen-macaulay tangent cone: {'yes' if free else 'no'}")
    return payload, lines, 0


def _cmd_family(args):
    if args.name == "bresinsky":
        params = BresinskyParams.from_h(args.parameter)
    else:
        params = ArslanParams.from_m(args.parameter)
    ap = family_apery_closed_form(params)
    orders_map = family_orders_closed_form(params)
    orders = [orders_map[w] for w in ap.elements]
    t = family_table_closed_form(params)
    census = order_census_closed_form(params).counts
    numerator = [1] + [census[k] for k in sorted(census)]
    r = params.top_order
    values = [sum(numerator[: n + 1]) for n in range(r + 5)]
    col_of = {w: i for i, w in enumerate(t.column_keys)}
    blocks = [
        {"name": name, "columns": [list(t.column(col_of[w])) for w in keys]}
        for name, keys in family_block_layout(params)
    ]
    payload = {
        "family": args.name,
        "parameter": args.parameter,
        "generators": list(params.generators),
        "multiplicity": params.generators[0],
        "reduction_number": r,
        "apery": {"modulus": ap.modulus, "elements": list(ap.elements), "orders": orders},
        "census": [[k, census[k]] for k in sorted(census)],
        "hilbert": {"numerator": numerator, "values": values},
        "blocks": blocks,
    }
    lines = [
        f"family: {args.name}",
        f"parameter: {args.parameter}",
        f"generators: {_ints(params.generators)}",
        f"multiplicity: {params.generators[0]}",
        f"reduction number: {r}",
        f"apery set modulo {ap.modulus}:",
        "  element  order",
    ]
    for w, o in zip(ap.elements, orders):
        lines.append(f"  {w:>7}  {o:>5}")
    lines.append(
        "order census: " + "  ".join(f"{k}: {census[k]}" for k in sorted(census))
    )
    lines.append(f"series numerator coefficients: {_ints(numerator)}")
    lines.append("series denominator: 1 - x")
    lines.append(f"hilbert function values: {_ints(values)}")
    lines.extend(_block_section(blocks))
    return payload, lines, 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise _UsageError(f"--range wants LO..HI with integers, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise _UsageError(f"--range is empty: {text!r}")
    return lo_i, hi_i


def _cmd_verify(args):
    if args.family and args.generators:
        raise _UsageError("verify takes either generators or --family, not both")
    if args.sweep_range is not None and not args.family:
        raise _UsageError("--range only applies together with --family")
    reports = []
    if args.family:
        lo, hi = _parse_range(args.sweep_range or "2..6")
        build = bresinsky if args.family == "bresinsky" else arslan
        for parameter in range(lo, hi + 1):
            reports.append(full_verify(build(parameter)))
    else:
        if not args.generators:
            raise _UsageError("verify needs generators or --family NAME")
        reports.append(full_verify(new_semigroup(args.generators)))
    passed = all(rep.passed for rep in reports)
    payload = {
        "reports": [
            {
                "subject": rep.subject,
                "checks": [
                    {
                        "name": chk.name,
                        "expected": chk.expected,
                        "actual": chk.actual,
                        "pass": chk.passed,
                    }
                    for chk in rep.checks
                ],
                "paper_deltas": list(rep.paper_deltas),
                "passed": rep.passed,
            }
            for rep in reports
        ],
        "passed": passed,
    }
    lines = []
    for rep in reports:
        lines.append(f"subject: {rep.subject}")
        for chk in rep.checks:
            if chk.passed:
                lines.append(f"  PASS {chk.name}")
            else:
                lines.append(
                    f"  FAIL {chk.name}: expected {chk.expected!r}, got {chk.actual!r}"
                )
        for note in rep.paper_deltas:
            lines.append(f"  delta: {note}")
    total = sum(len(rep.checks) for rep in reports)
    lines.append(
        ("all checks passed" if passed else "some checks FAILED") + f" ({total} checks)"
    )
    return payload, lines, 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine readable JSON")

    parser = argparse.ArgumentParser(
        prog="aperycone",
        description="Apery tables, tangent cone structure and Hilbert series "
        "of numerical semigroups, in exact integer arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("apery", parents=[common], help="Apery set and element orders")
    sp.add_argument("generators", nargs="+", type=int)
    sp.add_argument(
        "--apery-rep",
        type=int,
        default=None,
        metavar="A",
        help="Apery modulus to use instead of the multiplicity (must be a member)",
    )
    sp.set_defaults(handler=_cmd_apery)

    sp = sub.add_parser("table", parents=[common], help="Apery table rows 0 .. r")
    sp.add_argument("generators", nargs="+", type=int)
    sp.add_argument(
        "--paper-order",
        action="store_true",
        help="render family members in block layout instead of ascending columns",
    )
    sp.set_defaults(handler=_cmd_table)

    sp = sub.add_parser("ladders", parents=[common], help="landing structure per column")
    sp.add_argument("generators", nargs="+", type=int)
    sp.set_defaults(handler=_cmd_ladders)

    sp = sub.add_parser("cone", parents=[common], help="tangent cone decomposition")
    sp.add_argument("generators", nargs="+", type=int)
    sp.set_defaults(handler=_cmd_cone)

    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert series and function")
    sp.add_argument("generators", nargs="+", type=int)
    sp.set_defaults(handler=_cmd_hilbert)

    sp = sub.add_parser("family", parents=[common], help="closed form family data")
    sp.add_argument("name", choices=["bresinsky", "arslan"])
    sp.add_argument("parameter", type=int)
    sp.set_defaults(handler=_cmd_family)

    sp = sub.add_parser("verify", parents=[common], help="cross check against the oracle")
    sp.add_argument("generators", nargs="*", type=int)
    sp.add_argument("--family", choices=["bresinsky", "arslan"], default=None)
    sp.add_argument(
        "--range",
        dest="sweep_range",
        default=None,
        metavar="LO..HI",
        help="family parameter range to sweep (default 2..6)",
    )
    sp.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run one subcommand, print its document, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload, lines, code = args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        doc = OutputDocument("json", json.dumps(payload, indent=2))
    else:
        doc = OutputDocument("text", "\n".join(lines))
    print(doc.payload)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
