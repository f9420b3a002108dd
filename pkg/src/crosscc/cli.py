"""Command-line interface.

Subcommands:

* ``analyze``  — compute cross complexity for .mini and .dot files and emit
  a JSON (default) or CSV report. Exit code 0 on success, 1 if any file
  failed to parse or analyze, 2 when --fail-above is set and some unit's
  indicator exceeds it.
* ``plot``     — turn a saved JSON report into the halfplane SVG plus a CSV
  of points.
* ``dump-cfg`` — print the lowered control-flow graph of a .mini file in
  the DOT subset, for eyeballing the frontend.

Diagnostics go to stderr, colored unless CROSSCC_NO_COLOR is set or stderr
is not a terminal.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import __version__
from .basis import tree_bound
from .cfg import lower, mcc
from .dot import dump_cfg_dot, parse_dot
from .errors import CrossCCError
from .graph import as_weight
from .metric import Mode, cross_complexity, cross_complexity_of_basis
from .minilang import parse
from .plot import halfplane_svg, points_csv
from .report import AnalysisReport, UnitRecord, report_from_json


def _color_enabled() -> bool:
    if os.environ.get("CROSSCC_NO_COLOR"):
        return False
    return sys.stderr.isatty()


def _diag(message: str) -> None:
    if _color_enabled():
        message = f"\x1b[31m{message}\x1b[0m"
    print(message, file=sys.stderr)


def _analyze_mini(path: Path, mode: Mode, slope: Fraction) -> List[UnitRecord]:
    program = parse(path.read_text(encoding="utf-8"), str(path))
    records = []
    for position, fn in enumerate(program.functions):
        cfg = lower(fn, str(path))
        cc = cross_complexity(cfg, mode=mode, slope=slope)
        records.append(UnitRecord(
            unit=fn.name, source=f"{path}:{fn.name}", file=str(path),
            position=position, nu=cc.nu, omega=cc.omega_min,
            provenance=cc.provenance.value, region=cc.region.value,
            indicator=cc.indicator))
    return records


def _analyze_dot(path: Path, mode: Mode, slope: Fraction) -> List[UnitRecord]:
    doc = parse_dot(path.read_text(encoding="utf-8"), str(path))
    for src, dst in doc.duplicate_arcs:
        _diag(f"{path}: warning: arc {src} -> {dst} declared more than once; "
              "both kept as distinct edges")
    subject = doc.to_cfg() if doc.is_cfg() else doc.graph
    marked = doc.marked_tree() if mode == Mode.TREE_BOUND else None
    if marked is not None:
        cc = cross_complexity_of_basis(doc.graph, tree_bound(doc.graph, marked),
                                       slope=slope)
    else:
        cc = cross_complexity(subject, mode=mode, slope=slope)
    return [UnitRecord(
        unit=doc.name, source=str(path), file=str(path), position=0,
        nu=cc.nu, omega=cc.omega_min, provenance=cc.provenance.value,
        region=cc.region.value, indicator=cc.indicator)]


def _cmd_analyze(args) -> int:
    mode = Mode.EXACT if args.mode == "exact" else Mode.TREE_BOUND
    slope = as_weight(args.slope)
    records: List[UnitRecord] = []
    failed = False
    for raw in args.paths:
        path = Path(raw)
        try:
            if path.suffix == ".mini":
                records.extend(_analyze_mini(path, mode, slope))
            elif path.suffix == ".dot":
                records.extend(_analyze_dot(path, mode, slope))
            else:
                raise CrossCCError(f"unsupported file type {path.suffix!r} "
                                   "(expected .mini or .dot)")
        except (CrossCCError, OSError) as ex:
            _diag(f"{path}: error: {ex}")
            failed = True
    report = AnalysisReport.build(records, tool_version=__version__,
                                  mode=mode.value, slope=slope)
    text = report.to_csv() if args.format == "csv" else report.to_json()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if failed:
        return 1
    if args.fail_above is not None:
        threshold = as_weight(args.fail_above)
        offenders = [r for r in report.records if r.indicator > threshold]
        if offenders:
            for r in offenders:
                _diag(f"{r.source}: indicator {float(r.indicator):g} exceeds "
                      f"--fail-above {args.fail_above}")
            return 2
    return 0


def _cmd_plot(args) -> int:
    try:
        report = report_from_json(Path(args.report).read_text(encoding="utf-8"))
        svg = halfplane_svg(report)
        csv_text = points_csv(report)
    except (CrossCCError, OSError, ValueError, KeyError) as ex:
        _diag(f"{args.report}: error: {ex}")
        return 1
    out = Path(args.output)
    out.write_text(svg, encoding="utf-8")
    out.with_suffix(".csv").write_text(csv_text, encoding="utf-8")
    return 0


def _cmd_dump_cfg(args) -> int:
    status = 0
    chunks = []
    for raw in args.paths:
        path = Path(raw)
        try:
            program = parse(path.read_text(encoding="utf-8"), str(path))
            for fn in program.functions:
                cfg = lower(fn, str(path))
                chunks.append(f"// {path}:{fn.name}  mcc={mcc(cfg)}")
                chunks.append(dump_cfg_dot(cfg))
        except (CrossCCError, OSError) as ex:
            _diag(f"{path}: error: {ex}")
            status = 1
    text = "\n".join(chunks)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscc",
        description="Cross cyclomatic complexity of programs and control-flow graphs")
    parser.add_argument("--version", action="version", version=f"crosscc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze .mini / .dot files")
    analyze.add_argument("paths", nargs="+", metavar="path")
    analyze.add_argument("--mode", choices=["exact", "treebound"], default="exact")
    analyze.add_argument("--slope", default="2",
                         help="halfplane band boundary slope (default 2)")
    analyze.add_argument("--fail-above", dest="fail_above", default=None,
                         help="exit 2 if any unit's omega/nu exceeds this ratio")
    analyze.add_argument("--format", choices=["json", "csv"], default="json")
    analyze.add_argument("-o", "--output", default=None)
    analyze.set_defaults(func=_cmd_analyze)

    plot = sub.add_parser("plot", help="render a saved JSON report")
    plot.add_argument("report", help="report JSON produced by analyze")
    plot.add_argument("-o", "--output", required=True,
                      help="SVG output path; a .csv of points lands next to it")
    plot.set_defaults(func=_cmd_plot)

    dump = sub.add_parser("dump-cfg", help="emit lowered CFGs as DOT")
    dump.add_argument("paths", nargs="+", metavar="path")
    dump.add_argument("-o", "--output", default=None)
    dump.set_defaults(func=_cmd_dump_cfg)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
