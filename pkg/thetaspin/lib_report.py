#!/usr/bin/env python3
"""
Check records, report rendering and Prometheus textfile metrics.

Copyright (C) 2025 Sergei Sveshnikov

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, see <https://www.gnu.org/licenses/>.

Class-based API:
    Report(command).check(name, anchor, passed, detail)
    Report.info(name, text)
    Report.render_text() / Report.to_dict() / Report.write_json(path)
    Report.write_metrics(path, elapsed)
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from prometheus_client import CollectorRegistry, Gauge, write_to_textfile

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """One verified fact: the anchor names the table, list or identity it re-derives."""

    name: str
    anchor: str
    passed: bool
    detail: str = ""


@dataclass
class InfoLine:
    """Printed data that is reported but not verified."""

    name: str
    text: str


@dataclass
class Report:
    """
    Ordered results of one command.

    Args:
        command (str): Subcommand name, shown in the header and the JSON.
    """

    command: str
    results: List[CheckResult] = field(default_factory=lambda: [])
    infos: List[InfoLine] = field(default_factory=lambda: [])
    lines: List[str] = field(default_factory=lambda: [])

    def check(self, name: str, anchor: str, passed: bool, detail: str = "") -> CheckResult:
        """Record a check and log failures."""
        result = CheckResult(name, anchor, bool(passed), detail)
        self.results.append(result)
        if not result.passed:
            logger.error("FAIL %s [%s] %s", name, anchor, detail)
        else:
            logger.debug("PASS %s [%s]", name, anchor)
        return result

    def info(self, name: str, text: str) -> None:
        """Record an unverified line."""
        self.infos.append(InfoLine(name, text))

    def text(self, line: str) -> None:
        """Append free output such as a table row or a polynomial."""
        self.lines.append(line)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def render_text(self) -> str:
        """Aligned text: free lines, INFO lines, PASS/FAIL lines and a summary."""
        out = [f"== thetaspin {self.command} =="]
        out.extend(self.lines)
        for item in self.infos:
            out.append(f"INFO  {item.name}: {item.text}")
        width = max((len(r.name) for r in self.results), default=0)
        for result in self.results:
            status = "PASS" if result.passed else "FAIL"
            line = f"{status}  {result.name.ljust(width)}  [{result.anchor}]"
            if result.detail:
                line += f"  {result.detail}"
            out.append(line.rstrip())
        out.append(f"SUMMARY {self.total - self.failed}/{self.total} checks passed, {self.failed} failed")
        return "\n".join(out) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        """Structured form with stable key names."""
        return {
            "command": self.command,
            "passed": self.passed,
            "total": self.total,
            "failed": self.failed,
            "checks": [asdict(r) for r in self.results],
            "info": [asdict(i) for i in self.infos],
            "lines": list(self.lines),
        }

    def write_json(self, path: str) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info("JSON report written to %s", path)

    @staticmethod
    def _init_metrics(gauge_cls: Any, registry: Optional[CollectorRegistry]) -> Dict[str, Any]:
        """
        Create the report gauges on a registry.

        Args:
            gauge_cls (type): prometheus_client.Gauge or a stand-in.
            registry: Registry the gauges are attached to.

        Returns:
            dict: Gauges keyed by short name.
        """
        return {
            "total": gauge_cls("thetaspin_checks_total", "Checks performed by the last run", registry=registry),
            "failed": gauge_cls("thetaspin_checks_failed", "Checks failed in the last run", registry=registry),
            "check": gauge_cls("thetaspin_check_passed", "1 if the named check passed", ["check"], registry=registry),
            "seconds": gauge_cls("thetaspin_run_seconds", "Wall time of the last run", registry=registry),
        }

    def write_metrics(self, path: str, elapsed: float, gauge_cls: Any = Gauge) -> None:
        """Write the results in the Prometheus text format to ``path``."""
        registry = CollectorRegistry()
        gauges = self._init_metrics(gauge_cls, registry)
        gauges["total"].set(float(self.total))
        gauges["failed"].set(float(self.failed))
        for result in self.results:
            gauges["check"].labels(check=result.name).set(1.0 if result.passed else 0.0)
        gauges["seconds"].set(float(elapsed))
        write_to_textfile(path, registry)
        logger.info("Metrics written to %s", path)
