"""Command-line front end.

Subcommands: check, analyze, enumerate, verify, report, construct. Tables
come from files (plain or GAP-matrix text, sniffed), from "-" for standard
input, or from construction specs like "dihedral:5", "affine:9,4",
"example:Q9_4". Results go to standard output; diagnostics to standard
error. Exit codes: 0 success, 1 validation or check failure, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import catalog, checks, enumeration
from .constructions import ConstructionSpecError, build_from_spec
from .orbits import is_connected
from .quandle import Quandle

_SPEC_KINDS = ("dihedral", "affine", "example", "conjugation")


def _load_input(arg: str) -> Quandle:
    head = arg.split(":", 1)[0]
    if head in _SPEC_KINDS:
        return build_from_spec(arg)
    if arg == "-":
        return catalog.parse_table(sys.stdin.read(), "auto")
    return catalog.parse_table(Path(arg).read_text(), "auto")


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(line: str) -> None:
    print(line)


def cmd_check(args) -> int:
    try:
        q = _load_input(args.input)
    except (ValueError, OSError) as e:
        if args.format == "records":
            _emit(json.dumps({"command": "check", "valid": False, "error": str(e)}))
        else:
            print(f"invalid: {e}", file=sys.stderr)
        return 1
    if args.format == "records":
        _emit(json.dumps({"command": "check", "valid": True, "order": q.n}))
    else:
        _emit(f"valid quandle of order {q.n}")
    return 0


def cmd_analyze(args) -> int:
    q = _load_input(args.input)
    connected = is_connected(q)
    sufficiency = checks.check_latin_sufficiency(q)
    hayashi = checks.check_regular_cycle(q)
    fields = {
        "order": q.n,
        "connected": _yn(connected),
        "latin": _yn(q.is_latin),
        "unique-fixed-point": _yn(q.has_unique_fixed_points),
        "profile": str(q.profile()),
        "hayashi": "pass" if hayashi.consistent else "fail",
        "theorem-hypothesis": _yn(sufficiency.hypothesis_holds),
        "theorem-conclusion": _yn(sufficiency.conclusion_holds),
        "theorem-consistent": _yn(sufficiency.consistent),
    }
    if args.format == "records":
        record = {"command": "analyze", **fields}
        record["order"] = q.n
        _emit(json.dumps(record))
    else:
        _emit(" ".join(f"{k}={v}" for k, v in fields.items()))
    return 0


def cmd_enumerate(args) -> int:
    task = enumeration.EnumerationTask(
        order=args.order,
        up_to_iso=args.iso,
        predicate_filter=args.filter,
        order_guard=args.guard,
    )
    if args.jobs > 1:
        results = enumeration.enumerate_parallel(task, args.jobs)
        stream = iter(results)
    else:
        stream = enumeration.enumerate_quandles(task)
    count = 0
    for q in stream:
        count += 1
        if args.tables:
            if args.format == "records":
                _emit(json.dumps({"order": q.n, "rows": [list(r) for r in q.rows]}))
            else:
                _emit(catalog.serialize_table(q, "plain"))
    if not args.tables:
        if args.format == "records":
            _emit(json.dumps({
                "command": "enumerate", "order": args.order, "iso": args.iso,
                "filter": args.filter, "count": count,
            }))
        else:
            _emit(f"{count} quandles")
    return 0


def cmd_verify(args) -> int:
    inconsistencies = 0
    findings = []
    for n in range(1, args.max_order + 1):
        task = enumeration.EnumerationTask(order=n, order_guard=args.guard)
        tables = 0
        reports = 0
        bad = 0
        stream = list(enumeration.enumerate_quandles(task))
        for q in stream:
            tables += 1
            for report in checks.all_checks(q):
                reports += 1
                if not report.consistent:
                    bad += 1
                    print(
                        f"INCONSISTENT {report.name} on order-{n} table {q.rows}",
                        file=sys.stderr,
                    )
        findings.extend(checks.search_nonconnected_refinement(stream))
        inconsistencies += bad
        if args.format == "records":
            _emit(json.dumps({
                "command": "verify", "order": n, "tables": tables,
                "reports": reports, "inconsistent": bad,
            }))
        else:
            _emit(f"order {n}: {tables} quandles, {reports} reports, {bad} inconsistent")
    if args.format == "records":
        _emit(json.dumps({
            "command": "verify", "ok": inconsistencies == 0,
            "nonconnected_refinement_candidates": len(findings),
        }))
    else:
        _emit(f"nonconnected refinement candidates: {len(findings)}")
        _emit("all checks consistent" if inconsistencies == 0 else f"{inconsistencies} INCONSISTENT reports")
    return 0 if inconsistencies == 0 else 1


def cmd_report(args) -> int:
    entries = catalog.load_catalog(args.directory)
    stats = catalog.catalog_stats(entries)
    rows5, rows6 = catalog.appendix_tables(entries)
    if args.format == "records":
        _emit(json.dumps({
            "command": "report",
            "stats": catalog.stats_record(stats),
            **catalog.appendix_records(rows5, rows6),
        }))
    else:
        _emit(catalog.render_stats(stats))
        _emit("")
        _emit(catalog.render_appendix(rows5, rows6))
    return 0


def cmd_construct(args) -> int:
    q = build_from_spec(args.spec)
    if args.format == "records":
        _emit(json.dumps({"command": "construct", "order": q.n,
                          "rows": [list(r) for r in q.rows]}))
    else:
        _emit(catalog.serialize_table(q, "plain").rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Finite quandle toolkit: validate, analyze, enumerate, verify, report.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "records"), default="text",
                       help="records = one JSON object per line")

    p = sub.add_parser("check", help="validate a table against the three axioms")
    p.add_argument("input", help="file, '-' for stdin, or a construction spec")
    add_format(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("analyze", help="print the structural facts of one quandle")
    p.add_argument("input", help="file, '-' for stdin, or a construction spec")
    add_format(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("enumerate", help="enumerate all quandles of one order")
    p.add_argument("order", type=int)
    p.add_argument("--iso", action="store_true", help="one canonical table per isomorphism class")
    p.add_argument("--filter", choices=sorted(enumeration.PREDICATES), default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker processes; >1 sorts after merging")
    p.add_argument("--tables", action="store_true", help="print the tables instead of a count")
    p.add_argument("--guard", type=int, default=enumeration.DEFAULT_ORDER_GUARD,
                   help="largest order the search will accept")
    add_format(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run every checker on every quandle up to an order")
    p.add_argument("max_order", type=int)
    p.add_argument("--guard", type=int, default=enumeration.DEFAULT_ORDER_GUARD)
    add_format(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="catalog statistics and survey tables for a directory")
    p.add_argument("directory")
    add_format(p)
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("construct", help="emit a constructed table in plain format")
    p.add_argument("spec", help='e.g. "dihedral:5", "affine:9,4", "example:Q9_4"')
    add_format(p)
    p.set_defaults(fn=cmd_construct)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConstructionSpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
