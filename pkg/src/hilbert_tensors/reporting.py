"""Deterministic JSON / CSV emission for report rows.

Every row is a flat mapping with the fixed key order
(m, n, kind, value, bound, slack, certified, iterations).  Floats are
rendered with 17 significant digits, output is UTF-8 with LF line endings,
and serialization involves no timestamps or environment state, so identical
rows give byte-identical files.
"""

from __future__ import annotations

ROW_KEYS = ("m", "n", "kind", "value", "bound", "slack", "certified", "iterations")


def make_row(m, n, kind, value, bound, slack, certified, iterations) -> dict:
    return {
        "m": m,
        "n": n,
        "kind": kind,
        "value": value,
        "bound": bound,
        "slack": slack,
        "certified": certified,
        "iterations": iterations,
    }


def _fmt(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return "%.17g" % value
    return '"' + str(value).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_json_lines(rows) -> str:
    """One JSON object per line, keys in ROW_KEYS order."""
    lines = []
    for row in rows:
        body = ", ".join(f'"{k}": {_fmt(row.get(k))}' for k in ROW_KEYS)
        lines.append("{" + body + "}")
    return "\n".join(lines) + ("\n" if lines else "")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def to_csv(rows) -> str:
    """Flattened CSV with a header row; empty cells for nulls."""
    lines = [",".join(ROW_KEYS)]
    for row in rows:
        lines.append(",".join(_csv_cell(row.get(k)) for k in ROW_KEYS))
    return "\n".join(lines) + "\n"


def render(rows, fmt: str) -> str:
    if fmt == "json":
        return to_json_lines(rows)
    if fmt == "csv":
        return to_csv(rows)
    raise ValueError(f"unknown format {fmt!r}")
