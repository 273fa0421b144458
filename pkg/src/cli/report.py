#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Report Module

Structured command results rendered as text or JSON. Rendering is a pure
function of the report, so identical runs print identical bytes.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from ..core.classexpr import format_class
from ..core.gring import MotClass, format_rational
from ..core.series import RationalSeries, format_series
from ..utils.colors import Colors

SCHEMA_VERSION = 1


def plain(value: Any) -> Any:
    """JSON-compatible form: classes, series and fractions become text."""
    if isinstance(value, MotClass):
        return format_class(value)
    if isinstance(value, RationalSeries):
        return format_series(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [plain(v) for v in items]
    return str(value)


@dataclass
class Table:
    title: str
    columns: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def add(self, *row: Any) -> None:
        self.rows.append(row)


@dataclass
class Report:
    """
    Result of one command: ordered fields, tables, and an optional verdict
    (None for commands that only compute).
    """

    command: str
    fields: List[Tuple[str, Any]] = field(default_factory=list)
    tables: List[Table] = field(default_factory=list)
    verdict: Optional[bool] = None

    def add(self, key: str, value: Any) -> None:
        self.fields.append((key, value))

    def table(self, title: str, columns: Sequence[str]) -> Table:
        t = Table(title, tuple(columns))
        self.tables.append(t)
        return t

    def get(self, key: str, default: Any = None) -> Any:
        for k, v in self.fields:
            if k == key:
                return v
        return default

    def to_dict(self) -> dict:
        data = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "result": {k: plain(v) for k, v in self.fields},
            "tables": [
                {
                    "title": t.title,
                    "columns": list(t.columns),
                    "rows": [[plain(v) for v in row] for row in t.rows],
                }
                for t in self.tables
            ],
        }
        if self.verdict is not None:
            data["verdict"] = "PASS" if self.verdict else "FAIL"
        return data


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def _cell(value: Any) -> str:
    value = plain(value)
    if isinstance(value, bool):
        return Colors.verdict(value, "yes", "no")
    if isinstance(value, list):
        return ", ".join(str(v) for v in value)
    return "-" if value is None else str(value)


def render_text(report: Report) -> str:
    """Aligned `key: value` lines followed by tables and the verdict."""
    lines = []
    width = max((len(k) for k, _ in report.fields), default=0)
    for key, value in report.fields:
        lines.append(f"{key + ':':{width + 1}s} {_cell(value)}")
    for t in report.tables:
        lines.append("")
        lines.append(Colors.bold(t.title))
        cells = [[str(c) for c in t.columns]] + [[_cell(v) for v in row] for row in t.rows]
        widths = [max(len(Colors.strip_colors(row[i])) for row in cells) for i in range(len(t.columns))]
        for n, row in enumerate(cells):
            padded = [c + " " * (w - len(Colors.strip_colors(c))) for c, w in zip(row, widths)]
            lines.append("  ".join(padded).rstrip())
            if n == 0:
                lines.append("  ".join("-" * w for w in widths))
    if report.verdict is not None:
        lines.append("")
        lines.append(Colors.verdict(report.verdict))
    return "\n".join(lines)


def render(report: Report, fmt: str = "text") -> str:
    return render_json(report) if fmt == "json" else render_text(report)
