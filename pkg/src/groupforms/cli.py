"""Command-line interface: analyze, batch, lattice.

Exit codes: 0 all checks passed; 1 at least one check failed; 2 operational
error (unparsable input, budget exceeded); 3 hypothesis violation (the
requested theorem does not apply to the given group/formation).

Reports are deterministic: no timestamps, sorted keys, and batch output is
assembled in a fixed order regardless of worker parallelism.
"""

from __future__ import annotations

import argparse
import sys
import time
from multiprocessing import Pool
from pathlib import Path
from typing import Optional

from . import catalog as _catalog
from . import groupfile as _groupfile
from . import lattice as _lattice
from . import reports as _reports
from . import structure as _structure
from .formations import formation_by_name
from .permgroup import FiniteGroup, GroupBudgetError, GroupError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2
EXIT_HYPOTHESIS = 3

CHECK_NAMES = ("theorem1", "theorem2", "corollary1", "corollary2", "lemmas", "example864", "all")


class TimeBudget:
    def __init__(self, seconds: Optional[float]):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self) -> None:
        if self.seconds is not None and time.monotonic() - self.start > self.seconds:
            raise GroupBudgetError(f"time budget of {self.seconds}s exceeded")


def _load_group(spec: str, max_order: int) -> FiniteGroup:
    path = Path(spec)
    if path.exists():
        return _groupfile.parse_group_file(path, max_order=max_order)
    return _catalog.build_named(spec, max_order=max_order)


def _run_checks(
    group: FiniteGroup,
    formation_name: str,
    checks: list[str],
    budgets: dict,
) -> _reports.VerdictReport:
    F = formation_by_name(formation_name)
    budget = TimeBudget(budgets.get("time"))
    report = _reports.VerdictReport(
        kind="analyze",
        subject=_reports.group_descriptor(group),
        formation=F.name,
        budgets=budgets,
    )
    for check in checks:
        budget.check()
        try:
            if check == "theorem1":
                report.checks.append(_structure.check_theorem1(group, F).to_check_result())
            elif check == "theorem2":
                report.checks.append(_structure.check_theorem2(group, F).to_check_result())
            elif check == "corollary1":
                report.checks.append(_structure.check_corollary1(group, F).to_check_result())
            elif check == "corollary2":
                report.checks.append(_structure.check_corollary2(group, F).to_check_result())
            elif check == "lemmas":
                sub = _structure.check_lemma_suite([group], F)
                report.subreports.append(sub)
            elif check == "example864":
                report.subreports.append(_structure.verify_paper_example(group))
            else:
                raise GroupError(f"unknown check {check!r}")
        except GroupBudgetError as exc:
            report.add(check, _reports.ERROR, {"error": str(exc), "incomplete": True})
            break
    return report


def _expand_checks(check: str) -> list[str]:
    if check == "all":
        return ["theorem1", "theorem2", "corollary1", "corollary2", "lemmas"]
    return [check]


def _exit_code_for(report: _reports.VerdictReport) -> int:
    counts = report.summary()
    if counts[_reports.ERROR]:
        return EXIT_ERROR
    if counts[_reports.FAIL]:
        return EXIT_VIOLATION
    if counts[_reports.PASS] == 0 and counts[_reports.SKIP] > 0:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _emit(report: _reports.VerdictReport, out_path: Optional[str]) -> None:
    text = report.to_json()
    sys.stdout.write(text)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")


def cmd_analyze(args: argparse.Namespace) -> int:
    budgets = {
        "max_order": args.budget_max_order,
        "lattice": args.budget_lattice,
        "time": args.budget_time,
    }
    try:
        group = _load_group(args.group, args.budget_max_order)
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = _run_checks(group, args.formation, _expand_checks(args.check), budgets)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(report, args.report)
    return _exit_code_for(report)


def _batch_worker(task: tuple) -> dict:
    path, formation_name, check, budgets = task
    try:
        group = _groupfile.parse_group_file(path, max_order=budgets["max_order"])
    except (GroupError, OSError) as exc:
        return {"file": Path(path).name, "error": str(exc)}
    report = _run_checks(group, formation_name, _expand_checks(check), budgets)
    return {
        "file": Path(path).name,
        "order": group.order,
        "name": group.name,
        "report": report.to_dict(),
    }


def cmd_batch(args: argparse.Namespace) -> int:
    budgets = {
        "max_order": args.budget_max_order,
        "lattice": args.budget_lattice,
        "time": args.budget_time,
    }
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_ERROR
    files = sorted(p for p in directory.iterdir() if p.suffix == ".pgrp")
    tasks = [(str(p), args.formation, args.check, budgets) for p in files]
    if args.jobs > 1 and len(tasks) > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(_batch_worker, tasks)
    else:
        results = [_batch_worker(t) for t in tasks]
    # deterministic assembly: by (order, name, file); errors last, by file
    ok_results = [r for r in results if "error" not in r]
    err_results = [r for r in results if "error" in r]
    ok_results.sort(key=lambda r: (r["order"], r["name"] or "", r["file"]))
    err_results.sort(key=lambda r: r["file"])
    aggregate = {"pass": 0, "fail": 0, "skip": 0, "error": len(err_results)}
    for r in ok_results:
        for key in ("pass", "fail", "skip", "error"):
            aggregate[key] = aggregate[key] + r["report"]["summary"][key]
    out = {
        "schema_version": _reports.SCHEMA_VERSION,
        "tool": _reports.TOOL_NAME,
        "tool_version": _reports.TOOL_VERSION,
        "kind": "batch",
        "budgets": budgets,
        "formation": args.formation,
        "check": args.check,
        "runs": ok_results,
        "errors": err_results,
        "aggregate": aggregate,
    }
    import json

    text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if aggregate["error"]:
        return EXIT_ERROR
    if aggregate["fail"]:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace) -> int:
    try:
        group = _load_group(args.group, args.budget_max_order)
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    cache_path = Path(args.cache) if args.cache else None
    lat = None
    if cache_path and cache_path.exists():
        try:
            lat = _groupfile.cache_load(cache_path, group)
            source = "cache"
        except _groupfile.CacheMismatchError:
            lat = None
    if lat is None:
        try:
            lat = _lattice.all_subgroups(group, lattice_budget=args.budget_lattice)
        except GroupBudgetError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        source = "computed"
        if cache_path:
            _groupfile.cache_save(lat, cache_path)
    summary = {
        "group": group.name,
        "order": group.order,
        "subgroups": len(lat.nodes),
        "maximal_edges": len(lat.edges),
        "conjugacy_classes": len(lat.conjugacy_classes),
        "source": source,
    }
    import json

    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupforms",
        description="Formation-theoretic subgroup predicates and structure checks "
        "for small permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--formation", default="N", choices=["A", "N", "U", "NA", "Sol"])
        p.add_argument("--report", help="also write the JSON report to this path")
        p.add_argument("--budget-max-order", type=int, default=2000)
        p.add_argument("--budget-lattice", type=int, default=400)
        p.add_argument("--budget-time", type=float, default=None,
                       help="soft per-run time budget in seconds")

    p_analyze = sub.add_parser("analyze", help="run checks on a single group")
    p_analyze.add_argument("--group", required=True,
                           help="path to a .pgrp file or a constructor expression")
    p_analyze.add_argument("--check", default="all", choices=CHECK_NAMES)
    add_common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_batch = sub.add_parser("batch", help="verify every .pgrp file in a directory")
    p_batch.add_argument("--dir", required=True)
    p_batch.add_argument("--check", default="lemmas", choices=CHECK_NAMES)
    p_batch.add_argument("--jobs", type=int, default=1)
    add_common(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_lat = sub.add_parser("lattice", help="compute or load a subgroup lattice cache")
    p_lat.add_argument("--group", required=True)
    p_lat.add_argument("--cache", help="cache file path (load if valid, else recompute)")
    add_common(p_lat)
    p_lat.set_defaults(func=cmd_lattice)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
