"""Reading and writing semigroup tables (JSON or plain text)."""
from __future__ import annotations

import json

from .errors import InvalidInput, ParseError
from .semigroup import FiniteSemigroup, validate_table


def _decode(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data


def _parse_json(text: str) -> FiniteSemigroup:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "table" not in obj:
        raise ParseError("expected an object with a 'table' key")
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError("'table' must be a list of rows")
    if "order" in obj and obj["order"] != len(table):
        raise InvalidInput(f"'order' is {obj['order']} but the table has {len(table)} rows")
    return validate_table(table, zero=obj.get("zero"), identity=obj.get("identity"), names=obj.get("names"))


def _parse_text(text: str) -> FiniteSemigroup:
    lines = [ln for ln in text.splitlines()]
    # skip leading blank lines but keep numbering
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise ParseError("empty input", 1)
    try:
        n = int(lines[idx].strip())
    except ValueError:
        raise ParseError(f"expected the order, got {lines[idx].strip()!r}", idx + 1, 1) from None
    rows = []
    for ln_no in range(idx + 1, len(lines)):
        line = lines[ln_no]
        if not line.strip():
            continue
        if len(rows) == n:
            raise ParseError("extra content after the table", ln_no + 1, 1)
        row = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", ln_no + 1, col) from None
            col += len(tok) - 1
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", ln_no + 1, 1)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}", len(lines))
    return validate_table(rows)


def parse_input(data, format: str | None = None) -> FiniteSemigroup:
    """Parse JSON or plain text; ``format=None`` guesses from the first character."""
    text = _decode(data)
    if format is None:
        format = "json" if text.lstrip().startswith("{") else "text"
    if format == "json":
        return _parse_json(text)
    if format == "text":
        return _parse_text(text)
    raise ValueError(f"unknown format {format!r}")


def to_json(S: FiniteSemigroup) -> str:
    return json.dumps(S.to_dict(), ensure_ascii=False)


def to_text(S: FiniteSemigroup) -> str:
    lines = [str(S.order)] + [" ".join(map(str, row)) for row in S.table]
    return "\n".join(lines) + "\n"


def render_semigroup(S: FiniteSemigroup, format: str = "json") -> str:
    return to_json(S) if format == "json" else to_text(S)
