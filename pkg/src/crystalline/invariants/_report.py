# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Rendering of reports as aligned tables, JSON and CSV."""

from __future__ import annotations

import csv
import enum
import io
import json
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

from ._types import format_rational


class OutputFormat(enum.Enum):
    """Supported output formats."""

    TABLE = "table"
    """Aligned plain-text columns."""

    JSON = "json"
    """Indented JSON."""

    CSV = "csv"
    """Comma separated values with a header row."""


def to_json_value(value: Any) -> Any:
    """Convert a value to plain JSON data.

    Rationals become `"a/b"` strings, enums their value, tuples lists, and
    objects with a `to_dict()` method their dictionary.

    Args:
        value: The value.

    Returns:
        JSON-compatible data.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Mapping):
        return {str(key): to_json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(item) for item in value]
    to_dict = getattr(value, "to_dict", None)
    if callable(to_dict):
        return to_json_value(to_dict())
    raise TypeError(f"Cannot convert {type(value).__name__} to JSON.")


def flatten(value: Any, prefix: str = "") -> dict[str, Any]:
    """Flatten nested JSON data into dotted keys.

    Args:
        value: JSON data as returned by `to_json_value`.
        prefix: Key prefix of `value`.

    Returns:
        The leaves keyed by their dotted path, in document order.
    """
    if isinstance(value, dict):
        items: Iterable[tuple[str, Any]] = value.items()
    elif isinstance(value, list):
        items = ((str(index), item) for index, item in enumerate(value))
    else:
        return {prefix: value}
    flat: dict[str, Any] = {}
    for key, item in items:
        flat.update(flatten(item, f"{prefix}.{key}" if prefix else key))
    return flat


def format_cell(value: Any) -> str:
    """Format one leaf value for tables and CSV."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_rows(rows: Sequence[Any], fmt: OutputFormat) -> str:
    """Render a sequence of records with a common set of columns.

    Args:
        rows: The records, anything `to_json_value` accepts; columns are taken
            from the first record.
        fmt: The output format.

    Returns:
        The rendered text, ending in a newline.
    """
    data = [to_json_value(row) for row in rows]
    if fmt is OutputFormat.JSON:
        return json.dumps(data, indent=2) + "\n"
    flat = [flatten(row) for row in data]
    columns = list(flat[0]) if flat else []
    cells = [[format_cell(row.get(column)) for column in columns] for row in flat]
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        return buffer.getvalue()
    widths = [
        max([len(column), *(len(row[index]) for row in cells)])
        for index, column in enumerate(columns)
    ]
    lines = [
        "  ".join(text.rjust(width) for text, width in zip(line, widths)).rstrip()
        for line in [columns, *cells]
    ]
    return "\n".join(lines) + "\n"


def render_record(record: Any, fmt: OutputFormat) -> str:
    """Render a single report.

    Tables list one `key  value` pair per line; CSV writes a single row.

    Args:
        record: The report, anything `to_json_value` accepts.
        fmt: The output format.

    Returns:
        The rendered text, ending in a newline.
    """
    data = to_json_value(record)
    if fmt is OutputFormat.JSON:
        return json.dumps(data, indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        return render_rows([flatten(data)], fmt)
    flat = flatten(data)
    width = max((len(key) for key in flat), default=0)
    return "".join(
        f"{key.ljust(width)}  {format_cell(value)}\n" for key, value in flat.items()
    )
