"""Rendering of results as JSON, CSV, a rich table or TOON."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, Union

from rich.console import Console
from rich.table import Table
from toon_format import encode as toon_encode

from .constants import OUTPUT_FORMATS
from .errors import ParameterError
from .report import CheckReport
from .ring import LaurentPoly, QSeries

Value = Union[LaurentPoly, QSeries, Sequence[CheckReport]]


@dataclass(frozen=True)
class Result:
    """One command's output: a polynomial, a series or a list of reports."""

    value: Value
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        if isinstance(self.value, LaurentPoly):
            return "polynomial"
        if isinstance(self.value, QSeries):
            return "series"
        return "reports"

    @property
    def passed(self) -> bool:
        if isinstance(self.value, (LaurentPoly, QSeries)):
            return True
        return all(r.passed for r in self.value)


def _value_json(value: Value) -> Any:
    if isinstance(value, (LaurentPoly, QSeries)):
        return value.to_json()
    return [r.to_dict() for r in sorted(value, key=lambda r: r.name)]


def _rows(result: Result) -> tuple[list[str], list[list[str]]]:
    """Flat table view shared by csv, text and toon."""
    value = result.value
    if isinstance(value, LaurentPoly):
        columns = ["ex", "ey", "et", "ew", "coefficient"]
        return columns, [[*map(str, e), str(c)] for e, c in value.terms()]
    if isinstance(value, QSeries):
        return [f"{value.var}_degree", "coefficient"], [
            [str(n), str(c)] for n, c in enumerate(value.coeffs)
        ]
    rows = []
    for r in sorted(value, key=lambda r: r.name):
        w = r.witness
        rows.append(
            [
                r.name,
                "pass" if r.passed else "FAIL",
                w.location if w else "",
                w.expected if w else "",
                w.actual if w else "",
            ]
        )
    return ["check", "status", "location", "expected", "actual"], rows


def render_json(result: Result) -> str:
    payload = {
        "kind": result.kind,
        "metadata": result.metadata,
        "value": _value_json(result.value),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(result: Result) -> str:
    columns, rows = _rows(result)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def render_text(result: Result) -> str:
    columns, rows = _rows(result)
    title = ", ".join(f"{k}={v}" for k, v in sorted(result.metadata.items()))
    table = Table(title=title or None)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*row)
    buf = io.StringIO()
    Console(file=buf, width=160, color_system=None).print(table)
    return buf.getvalue()


def render_toon(result: Result) -> str:
    columns, rows = _rows(result)
    payload = {
        "kind": result.kind,
        "metadata": result.metadata,
        "rows": [dict(zip(columns, row)) for row in rows],
    }
    return str(toon_encode(payload)) + "\n"


_RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "text": render_text,
    "toon": render_toon,
}


def render(result: Result, fmt: str) -> str:
    if fmt not in OUTPUT_FORMATS:
        choices = ", ".join(OUTPUT_FORMATS)
        raise ParameterError(f"unknown output format {fmt!r} (choose from {choices})")
    return _RENDERERS[fmt](result)
