"""CLI behavior: exit codes, reports, determinism."""

from __future__ import annotations

import json

import pytest

from groupforms import catalog, groupfile
from groupforms.cli import EXIT_ERROR, EXIT_HYPOTHESIS, EXIT_OK, EXIT_VIOLATION, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_theorem1_pass(capsys):
    code, out = run_cli(capsys, "analyze", "--group", "S3", "--formation", "N", "--check", "theorem1")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["checks"][0]["status"] == "pass"
    assert payload["subject"]["order"] == 6


def test_analyze_hypothesis_violation_exit(capsys):
    code, out = run_cli(capsys, "analyze", "--group", "C6", "--formation", "N", "--check", "theorem1")
    assert code == EXIT_HYPOTHESIS
    payload = json.loads(out)
    assert payload["checks"][0]["status"] == "skip"


def test_analyze_unknown_group_errors(capsys):
    code = main(["analyze", "--group", "nonsense:9", "--check", "theorem1"])
    assert code == EXIT_ERROR


def test_analyze_report_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out = run_cli(
        capsys, "analyze", "--group", "A4", "--formation", "N",
        "--check", "theorem2", "--report", str(out_path),
    )
    assert code == EXIT_OK
    assert out_path.read_text() == out


def test_analyze_deterministic(capsys):
    code1, out1 = run_cli(capsys, "analyze", "--group", "S4", "--formation", "N", "--check", "all")
    code2, out2 = run_cli(capsys, "analyze", "--group", "S4", "--formation", "N", "--check", "all")
    assert (code1, out1) == (code2, out2)
    assert code1 == EXIT_OK


def test_batch_directory(tmp_path, capsys):
    d = tmp_path / "groups"
    d.mkdir()
    for name in ("S3", "A4", "D5"):
        groupfile.write_group_file(catalog.build_named(name), d / f"{name.lower()}.pgrp")
    code, out = run_cli(
        capsys, "batch", "--dir", str(d), "--formation", "N", "--check", "theorem1",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["aggregate"]["fail"] == 0
    assert [r["file"] for r in payload["runs"]] == ["s3.pgrp", "d5.pgrp", "a4.pgrp"]


def test_batch_empty_directory(tmp_path, capsys):
    d = tmp_path / "empty"
    d.mkdir()
    code, out = run_cli(capsys, "batch", "--dir", str(d))
    assert code == EXIT_OK
    assert json.loads(out)["runs"] == []


def test_batch_error_isolation(tmp_path, capsys):
    d = tmp_path / "mixed"
    d.mkdir()
    groupfile.write_group_file(catalog.build_named("S3"), d / "s3.pgrp")
    (d / "broken.pgrp").write_text("pgrp v1\ndegree 3\norder 99\n(1 2 3)\n")
    code, out = run_cli(capsys, "batch", "--dir", str(d), "--check", "theorem1")
    assert code == EXIT_ERROR
    payload = json.loads(out)
    assert len(payload["errors"]) == 1
    assert len(payload["runs"]) == 1
    assert payload["runs"][0]["report"]["summary"]["pass"] == 1


def test_batch_parallel_byte_identical(tmp_path, capsys):
    d = tmp_path / "par"
    d.mkdir()
    for name in ("S3", "A4", "C6", "D4", "Q8", "S4"):
        groupfile.write_group_file(catalog.build_named(name), d / f"{name.lower()}.pgrp")
    code1, seq = run_cli(capsys, "batch", "--dir", str(d), "--check", "theorem1", "--jobs", "1")
    code2, par = run_cli(capsys, "batch", "--dir", str(d), "--check", "theorem1", "--jobs", "3")
    assert seq == par
    assert code1 == code2


def test_lattice_cache_flow(tmp_path, capsys):
    cache = tmp_path / "s4.lattice.json"
    code1, out1 = run_cli(capsys, "lattice", "--group", "S4", "--cache", str(cache))
    assert code1 == EXIT_OK
    assert json.loads(out1)["source"] == "computed"
    code2, out2 = run_cli(capsys, "lattice", "--group", "S4", "--cache", str(cache))
    assert json.loads(out2)["source"] == "cache"
    assert json.loads(out2)["subgroups"] == 30


def test_lattice_budget_exceeded(capsys):
    code = main(["lattice", "--group", "example864", "--budget-lattice", "400"])
    assert code == EXIT_ERROR
