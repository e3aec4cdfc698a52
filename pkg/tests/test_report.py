#!/usr/bin/env python3
"""Tests for check reports and their JSON and metrics output."""

# pylint: disable=missing-function-docstring

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import pytest

from thetaspin.lib_report import Report


class StubGauge:
    """Gauge replacement capturing set and labels calls."""

    instances: list["StubGauge"] = []

    def __init__(self, name: str, doc: str, labelnames: Any = (), registry: Any = None) -> None:
        self.name = name
        self.doc = doc
        self.labelnames = list(labelnames)
        self.registry = registry
        self.values: list[float] = []
        self.children: dict[str, "StubGauge"] = {}
        StubGauge.instances.append(self)

    def labels(self, **kwargs: str) -> "StubGauge":
        key = ",".join(f"{k}={v}" for k, v in sorted(kwargs.items()))
        if key not in self.children:
            self.children[key] = StubGauge(f"{self.name}{{{key}}}", self.doc)
        return self.children[key]

    def set(self, value: float) -> None:
        self.values.append(value)


def _sample_report() -> Report:
    report = Report("demo")
    report.text("row one")
    report.info("printed", "taken as given")
    report.check("short", "anchor a", True)
    report.check("a longer name", "anchor b", False, "expected 3, got 4")
    return report


def test_counts() -> None:
    report = _sample_report()
    assert report.total == 2
    assert report.failed == 1
    assert not report.passed
    assert Report("empty").passed


def test_render_text() -> None:
    lines = _sample_report().render_text().splitlines()
    assert lines[0] == "== thetaspin demo =="
    assert lines[1] == "row one"
    assert lines[2] == "INFO  printed: taken as given"
    assert lines[3] == "PASS  short          [anchor a]"
    assert lines[4] == "FAIL  a longer name  [anchor b]  expected 3, got 4"
    assert lines[5] == "SUMMARY 1/2 checks passed, 1 failed"


def test_failures_are_logged(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.ERROR, logger="thetaspin.lib_report"):
        _sample_report()
    assert "FAIL a longer name [anchor b]" in caplog.text


def test_json(tmp_path: Path) -> None:
    path = tmp_path / "report.json"
    _sample_report().write_json(str(path))
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["command"] == "demo"
    assert data["passed"] is False
    assert data["total"] == 2
    assert data["checks"][1] == {
        "name": "a longer name",
        "anchor": "anchor b",
        "passed": False,
        "detail": "expected 3, got 4",
    }
    assert data["info"] == [{"name": "printed", "text": "taken as given"}]


def test_init_metrics_creates_four_gauges() -> None:
    StubGauge.instances.clear()
    gauges = Report._init_metrics(StubGauge, None)  # pylint: disable=protected-access
    assert set(gauges) == {"total", "failed", "check", "seconds"}
    assert len(StubGauge.instances) == 4
    assert gauges["check"].labelnames == ["check"]


def test_write_metrics_sets_values(tmp_path: Path) -> None:
    StubGauge.instances.clear()
    _sample_report().write_metrics(str(tmp_path / "stub.prom"), 1.5, gauge_cls=StubGauge)
    total, failed, check, seconds = StubGauge.instances[:4]
    assert total.values == [2.0]
    assert failed.values == [1.0]
    assert seconds.values == [1.5]
    assert check.children["check=short"].values == [1.0]
    assert check.children["check=a longer name"].values == [0.0]


def test_write_metrics_textfile(tmp_path: Path) -> None:
    path = tmp_path / "thetaspin.prom"
    _sample_report().write_metrics(str(path), 0.25)
    text = path.read_text(encoding="utf-8")
    assert "thetaspin_checks_total 2.0" in text
    assert "thetaspin_checks_failed 1.0" in text
    assert 'thetaspin_check_passed{check="short"} 1.0' in text
    assert "thetaspin_run_seconds 0.25" in text
