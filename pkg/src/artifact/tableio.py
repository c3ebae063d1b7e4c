"""Reading and writing qi tables as CSV or JSON.

CSV has the mandatory header ``qi_index,n_days,delta_du`` and 24 data rows.
JSON is an array of 24 objects with the same keys.  Row numbers in error
messages count data rows from 1, header excluded.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import TableFormatError, ValidationError
from .piecewise import N_QI, QiInterval, TropicalYearTable

COLUMNS = ("qi_index", "n_days", "delta_du")

__all__ = ["COLUMNS", "fmt", "parse_qi_table", "write_qi_table", "write_rows"]


def fmt(v) -> str:
    """12 significant digits, no negative zero."""
    if isinstance(v, int):
        return str(v)
    v = float(v)
    if v == 0.0:
        v = 0.0
    return f"{v:.12g}"


def _json_number(v):
    if isinstance(v, int):
        return v
    return float(fmt(v))


def _read_text(source) -> str:
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            return sys.stdin.read()
        return Path(source).read_text(encoding="utf-8")
    return source.read()


def _parse_row(rownum: int, qi_index, n_days, delta_du, previous: int) -> QiInterval:
    try:
        idx = int(str(qi_index).strip())
    except ValueError:
        raise TableFormatError(f"qi_index {qi_index!r} is not an integer", row=rownum) from None
    try:
        n = float(n_days)
        delta = float(delta_du)
    except (TypeError, ValueError):
        raise TableFormatError(f"non-numeric value in {n_days!r}, {delta_du!r}", row=rownum) from None
    if not (math.isfinite(n) and math.isfinite(delta)):
        raise TableFormatError("values must be finite", row=rownum)
    if idx != previous + 1:
        raise TableFormatError(f"qi_index {idx} does not follow {previous}; expected {previous + 1}", row=rownum)
    if n <= 0:
        raise TableFormatError(f"invalid length n_days={n_days!r}; must be positive", row=rownum)
    return QiInterval(idx, n, delta)


def _build(raw_rows: Sequence[tuple], start: float) -> TropicalYearTable:
    if len(raw_rows) != N_QI:
        raise TableFormatError(f"expected {N_QI} data rows, got {len(raw_rows)}")
    intervals = []
    previous = 0
    for rownum, row in enumerate(raw_rows, start=1):
        qi = _parse_row(rownum, *row, previous)
        intervals.append(qi)
        previous = qi.index
    return TropicalYearTable(tuple(intervals), start=start, strict_closure=False)


def _csv_rows(text: str) -> list[tuple]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TableFormatError("empty input; header row required") from None
    if tuple(h.strip() for h in header) != COLUMNS:
        raise TableFormatError(f"header must be {','.join(COLUMNS)}, got {','.join(header)}")
    rows = []
    for rownum, row in enumerate((r for r in reader if any(c.strip() for c in r)), start=1):
        if len(row) != len(COLUMNS):
            raise TableFormatError(f"expected {len(COLUMNS)} fields, got {len(row)}", row=rownum)
        rows.append(tuple(row))
    return rows


def _json_rows(text: str) -> list[tuple]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise TableFormatError("JSON qi table must be an array of objects")
    rows = []
    for rownum, obj in enumerate(data, start=1):
        if not isinstance(obj, dict) or set(obj) != set(COLUMNS):
            raise TableFormatError(f"object must have exactly the keys {', '.join(COLUMNS)}", row=rownum)
        rows.append(tuple(obj[k] for k in COLUMNS))
    return rows


def parse_qi_table(source, format: str = "csv", start: float = 0.0) -> TropicalYearTable:
    """Parse a qi table from a path, ``"-"`` (stdin), or a text stream.

    An unclosed table (deviations not summing to zero) is accepted and a
    warning is logged.
    """
    text = _read_text(source)
    if format == "csv":
        rows = _csv_rows(text)
    elif format == "json":
        rows = _json_rows(text)
    else:
        raise ValidationError(f"unknown table format {format!r}")
    return _build(rows, start)


def write_rows(out: IO[str], header: Sequence[str], rows: Iterable[Sequence], format: str = "csv") -> None:
    """Write homogeneous records as CSV (with header) or a JSON array."""
    rows = list(rows)
    if format == "json":
        records = [{k: _json_number(v) if not isinstance(v, str) else v for k, v in zip(header, r)} for r in rows]
        out.write(json.dumps(records, indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for r in rows:
        writer.writerow([v if isinstance(v, str) else fmt(v) for v in r])


def write_qi_table(table: TropicalYearTable, out: IO[str], format: str = "csv") -> None:
    write_rows(out, COLUMNS, ((qi.index, qi.n, qi.delta) for qi in table.intervals), format)
