#!/usr/bin/env python3
"""Tests for the thetaspin CLI."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from thetaspin import cli
from thetaspin.lib_exact_arith import ONE, ZERO, ConsistencyError
from thetaspin.lib_orbit_tools import MixedTableReport
from thetaspin.lib_report import Report

# pylint: disable=missing-function-docstring


def _with_argv(argv: list[str], func: Callable[[], Any]) -> Any:
    """Temporarily replace sys.argv for tests."""

    old = sys.argv[:]
    try:
        sys.argv = argv[:]
        return func()
    finally:
        sys.argv = old


def _noop_logging(_: str) -> None:
    """Typed stub for logging configuration hook."""


def _command_returning(report: Report) -> Callable[[cli.Session, argparse.Namespace], Report]:
    def _command(session: cli.Session, args: argparse.Namespace) -> Report:
        _ = session, args
        return report

    return _command


def _command_raising(exc: Exception) -> Callable[[cli.Session, argparse.Namespace], Report]:
    def _command(session: cli.Session, args: argparse.Namespace) -> Report:
        _ = session, args
        raise exc

    return _command


def test_parse_args_defaults() -> None:
    args = cli.parse_args(["table1"])
    assert args.command == "table1"
    assert args.seed == 2024
    assert args.json is None
    assert args.metrics_file is None
    assert args.log_level == "INFO"
    assert args.env_seed_warning is None


def test_parse_args_reads_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("THETASPIN_SEED", "7")
    monkeypatch.setenv("THETASPIN_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("THETASPIN_METRICS_FILE", "/tmp/thetaspin.prom")
    args = cli.parse_args(["invariants"])
    assert args.seed == 7
    assert args.log_level == "DEBUG"
    assert args.metrics_file == "/tmp/thetaspin.prom"


def test_invalid_env_seed_falls_back_with_warning(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("THETASPIN_SEED", "many")
    args = cli.parse_args(["table1"])
    assert args.seed == 2024
    assert "THETASPIN_SEED" in args.env_seed_warning


def test_flag_overrides_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("THETASPIN_SEED", "7")
    assert cli.parse_args(["table1", "--seed", "9"]).seed == 9


def test_mixed_table_index_is_restricted() -> None:
    assert cli.parse_args(["mixed-table", "4"]).index == 4
    with pytest.raises(SystemExit) as excinfo:
        cli.parse_args(["mixed-table", "9"])
    assert excinfo.value.code == cli.EXIT_USAGE


def test_element_required_for_jordan() -> None:
    with pytest.raises(SystemExit) as excinfo:
        cli.parse_args(["jordan"])
    assert excinfo.value.code == cli.EXIT_USAGE


def test_version_flag(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        cli.parse_args(["--version"])
    assert excinfo.value.code == 0
    assert "thetaspin" in capsys.readouterr().out


def test_parse_p_expr() -> None:
    assert cli.parse_p_expr("p1") == (ONE, ZERO, ZERO, ZERO)
    assert cli.parse_p_expr("p2 + p3") == (ZERO, ONE, ONE, ZERO)
    assert cli.parse_p_expr("2p1-p4") == (2 * ONE, ZERO, ZERO, -ONE)
    assert cli.parse_p_expr("p1+p1") == (2 * ONE, ZERO, ZERO, ZERO)


@pytest.mark.parametrize("text", ["", "q1", "p5", "p1p2", "p1+"])
def test_parse_p_expr_rejects(text: str) -> None:
    with pytest.raises(ValueError):
        cli.parse_p_expr(text)


def test_main_dynkin_scheme_writes_dot(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setattr(cli, "_configure_logging", _noop_logging)
    dot = tmp_path / "scheme.dot"
    report_path = tmp_path / "report.json"
    argv = ["thetaspin", "dynkin-scheme", "--dot", str(dot), "--json", str(report_path)]
    with pytest.raises(SystemExit) as excinfo:
        _with_argv(argv, cli.main)
    assert excinfo.value.code == cli.EXIT_OK
    assert dot.read_text(encoding="utf-8").startswith("graph scheme {")
    out = capsys.readouterr().out
    assert out.startswith("== thetaspin dynkin-scheme ==")
    assert "nodes 8" in out
    assert json.loads(report_path.read_text(encoding="utf-8"))["passed"] is True


def test_main_bad_element_exits_with_usage(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(cli, "_configure_logging", _noop_logging)
    with pytest.raises(SystemExit) as excinfo:
        _with_argv(["thetaspin", "dynkin-scheme", "--element", "(1,2,3)x1"], cli.main)
    assert excinfo.value.code == cli.EXIT_USAGE


def test_main_consistency_error_exit(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(cli, "_configure_logging", _noop_logging)
    monkeypatch.setitem(cli.COMMANDS, "table1", _command_raising(ConsistencyError("broken")))
    with pytest.raises(SystemExit) as excinfo:
        _with_argv(["thetaspin", "table1"], cli.main)
    assert excinfo.value.code == cli.EXIT_INCONSISTENT


def test_main_failed_check_exit(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    report = Report("table1")
    report.check("always", "nowhere", False, "forced")
    monkeypatch.setattr(cli, "_configure_logging", _noop_logging)
    monkeypatch.setitem(cli.COMMANDS, "table1", _command_returning(report))
    metrics = tmp_path / "metrics.prom"
    with pytest.raises(SystemExit) as excinfo:
        _with_argv(["thetaspin", "table1", "--metrics-file", str(metrics)], cli.main)
    assert excinfo.value.code == cli.EXIT_FAILED
    assert "thetaspin_checks_failed 1.0" in metrics.read_text(encoding="utf-8")


def test_run_returns_ok_for_passing_report(monkeypatch: pytest.MonkeyPatch) -> None:
    report = Report("invariants")
    report.check("always", "nowhere", True)
    monkeypatch.setitem(cli.COMMANDS, "invariants", _command_returning(report))
    assert cli.run(cli.parse_args(["invariants"])) == cli.EXIT_OK


def test_run_writes_json_only_when_asked(monkeypatch: pytest.MonkeyPatch, mocker: Any, tmp_path: Path) -> None:
    report = Report("invariants")
    monkeypatch.setitem(cli.COMMANDS, "invariants", _command_returning(report))
    spy = mocker.spy(report, "write_json")
    cli.run(cli.parse_args(["invariants"]))
    assert spy.call_count == 0
    target = str(tmp_path / "out.json")
    cli.run(cli.parse_args(["invariants", "--json", target]))
    spy.assert_called_once_with(target)


def test_session_builds_lazily() -> None:
    session = cli.Session(5)
    assert session.seed == 5
    assert "model" not in session.__dict__
    assert session.group is session.group


@pytest.mark.slow
def test_dump_grading_command(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(cli.parse_args(["dump-grading"])) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "g0 node 8:" in out
    assert "SUMMARY 1/1 checks passed, 0 failed" in out


class _PartialFitTools:
    """Tools stand-in whose characteristic convention fits only some rows."""

    @staticmethod
    def verify_mixed_table(index: int, group: Any = None) -> MixedTableReport:
        _ = group
        return MixedTableReport(index, [], (1, 1, 1, 1), "positions (1, 2, 3, 4), centre scale 1", (3, 4))


def test_partial_convention_fit_fails_the_table() -> None:
    session = cli.Session(1)
    session.__dict__["tools"] = _PartialFitTools()
    session.__dict__["group"] = None
    report = Report("mixed-table")
    cli.mixed_checks(session, report, 8)
    assert report.failed == 1
    failed = [result for result in report.results if not result.passed]
    assert failed[0].name == "mixed8.convention"
    assert "fits 3/4 rows" in failed[0].detail
