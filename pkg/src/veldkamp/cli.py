"""Command-line entry point: ``veldkamp analyze`` and ``veldkamp tables``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import CapacityError, VeldkampError
from .expect import paper_checks
from .hyperplanes import DEFAULT_MAX_POINTS
from .incidence import build_extended_dynkin_d, parse_edge_list
from .labeling import builtin_labeling, load_labeling
from .report import analyze, emit_dot, render_text, to_dict
from .tables import compare_d4, compare_d5, default_fixtures

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="veldkamp", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="hyperplanes, Veldkamp lines, subspaces, labelings")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--dynkin-d", type=int, metavar="N")
    src.add_argument("--graph", type=Path, metavar="FILE", help="edge-list file")
    a.add_argument("--labeling", metavar="NAME|FILE",
                   help="'builtin' (D~n only) or a labeling file")
    a.add_argument("--variant", type=int, choices=(1, 2), default=1)
    a.add_argument("--allow-nonidentity", action="store_true",
                   help="accept a labeling whose total product is not the identity")
    a.add_argument("--format", choices=("text", "json", "dot"), default="text")
    a.add_argument("--dot-view", choices=("diagram", "veldkamp", "hierarchy"), default="hierarchy")
    a.add_argument("--out", type=Path)
    a.add_argument("--expect", choices=("paper",))
    a.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    a.add_argument("--workers", type=int, default=1)

    t = sub.add_parser("tables", help="compare against the published D~4/D~5 tables")
    t.add_argument("--dynkin-d", type=int, choices=(4, 5), required=True, metavar="N")
    t.add_argument("--fixtures", type=Path, help=argparse.SUPPRESS)
    return p


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_analyze(args) -> int:
    if args.dynkin_d is not None:
        if args.dynkin_d < 4:
            print("error: --dynkin-d needs N >= 4", file=sys.stderr)
            return EXIT_USAGE
        structure = build_extended_dynkin_d(args.dynkin_d)
    else:
        if args.expect:
            print("error: --expect paper needs --dynkin-d", file=sys.stderr)
            return EXIT_USAGE
        structure = parse_edge_list(args.graph.read_text(encoding="utf-8"), name=args.graph.name)

    labeling = None
    lab_arg = args.labeling or ("builtin" if args.expect else None)
    if lab_arg == "builtin":
        if args.dynkin_d is None:
            print("error: builtin labelings exist only for --dynkin-d", file=sys.stderr)
            return EXIT_USAGE
        labeling = builtin_labeling(args.dynkin_d, args.variant)
    elif lab_arg is not None:
        labeling = load_labeling(Path(lab_arg), point_count=structure.point_count,
                                 allow_nonidentity=args.allow_nonidentity)

    report = analyze(structure, labeling, max_points=args.max_points, workers=args.workers)
    if args.format == "json":
        _write(json.dumps(to_dict(report), indent=1) + "\n", args.out)
    elif args.format == "dot":
        _write(emit_dot(report, args.dot_view), args.out)
    else:
        _write(render_text(report), args.out)

    if args.expect:
        failed = 0
        for c in paper_checks(report, args.dynkin_d):
            mark = "PASS" if c.ok else "FAIL"
            print(f"[{mark}] {c.name}" + ("" if c.ok else f": {c.detail}"), file=sys.stderr)
            failed += not c.ok
        return EXIT_VERIFY if failed else EXIT_OK
    return EXIT_OK


def cmd_tables(args) -> int:
    fixtures = default_fixtures()
    if args.fixtures:
        fixtures.update(json.loads(args.fixtures.read_text(encoding="utf-8")))
    n = args.dynkin_d
    report = analyze(build_extended_dynkin_d(n), builtin_labeling(n))
    compare = compare_d4 if n == 4 else compare_d5
    diff = compare(report.space, report.induced, fixtures)
    names = "tables 1-3" if n == 4 else "tables 4-6"
    if diff:
        print(f"{names}: {len(diff)} difference(s)")
        for line in diff:
            print(f"  - {line}")
        return EXIT_VERIFY
    print(f"{names}: all entries match")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        return cmd_tables(args)
    except (CapacityError, VeldkampError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
