"""
This module reads and writes Cayley tables and action tables.

Two table formats are understood:

* ``.sgp`` text: lines starting with ``#`` are ignored, the first token is the order n,
  followed by exactly n² row-major element ids.
* structured: a mapping ``{order, table, labels?}`` given as JSON or YAML.

Action tables use the ``.sgp`` layout with a two-token header ``m |G|``.
"""

import json
from typing import Any

import yaml

from .core import FiniteSemigroup, validate_table
from .errors import FormatError

STRUCTURED_KEYS = {"order", "table", "labels"}


LABELS_PREFIX = "# labels:"


def _tokens(text: str) -> list[str]:
    tokens: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            continue
        tokens.extend(line.split())
    return tokens


def _labels(text: str) -> list[str] | None:
    for line in text.splitlines():
        if line.startswith(LABELS_PREFIX):
            return line[len(LABELS_PREFIX) :].split()
    return None


def _int_token(token: str) -> int:
    try:
        return int(token, 10)
    except ValueError as err:
        raise FormatError(f"Expected a decimal integer, got {token!r}") from err


def parse_sgp(text: str) -> FiniteSemigroup:
    """
    Parse ``.sgp`` text into a validated semigroup.

    Raises:
        FormatError: If the header is missing, a token is not an integer, or the token count is wrong
        ShapeError: If an entry is out of range
        NonAssociativeError: If the table is not associative
    """
    tokens = _tokens(text)
    if not tokens:
        raise FormatError("Empty table: expected the order n as first token")

    n = _int_token(tokens[0])
    if n < 1:
        raise FormatError(f"Order must be positive, got {n}")

    body = tokens[1:]
    if len(body) < n * n:
        raise FormatError(f"Expected {n * n} table entries, got {len(body)}")
    if len(body) > n * n:
        raise FormatError(f"Trailing garbage after {n * n} table entries: {body[n * n]!r}")

    values = [_int_token(tok) for tok in body]
    table = [values[i * n : (i + 1) * n] for i in range(n)]
    labels = _labels(text)
    return validate_table(n, table, labels if labels is not None and len(labels) == n else None)


def dump_sgp(S: FiniteSemigroup, comment: str | None = None) -> str:
    """Render S as ``.sgp`` text."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    if S.labels is not None:
        lines.append(LABELS_PREFIX + " " + " ".join(S.labels))
    lines.append(str(S.order))
    lines.extend(" ".join(str(x) for x in row) for row in S.rows)
    return "\n".join(lines) + "\n"


def parse_structured(data: Any) -> FiniteSemigroup:
    """
    Build a semigroup from a mapping ``{order, table, labels?}``.

    Raises:
        FormatError: If the mapping is malformed or carries unknown keys
    """
    if not isinstance(data, dict):
        raise FormatError("Structured table must be a mapping")

    extra = sorted(set(data) - STRUCTURED_KEYS)
    if extra:
        raise FormatError(f"Unknown keys in structured table: {', '.join(map(str, extra))}")
    if "order" not in data or "table" not in data:
        raise FormatError("Structured table must contain 'order' and 'table'")

    order = data["order"]
    if not isinstance(order, int) or isinstance(order, bool):
        raise FormatError(f"'order' must be an integer, got {order!r}")

    table = data["table"]
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise FormatError("'table' must be a list of rows")
    if any(not isinstance(x, int) or isinstance(x, bool) for row in table for x in row):
        raise FormatError("'table' entries must be integers")

    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)):
        raise FormatError("'labels' must be a list of strings")

    return validate_table(order, table, labels)


def load_structured(text: str) -> FiniteSemigroup:
    """Parse JSON or YAML text holding a structured table."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise FormatError(f"Cannot parse structured table: {err}") from err
    return parse_structured(data)


def to_structured(S: FiniteSemigroup) -> dict[str, Any]:
    """Return the structured mapping for S."""
    data: dict[str, Any] = {"order": S.order, "table": [list(row) for row in S.rows]}
    if S.labels is not None:
        data["labels"] = list(S.labels)
    return data


def dump_structured(S: FiniteSemigroup) -> str:
    return json.dumps(to_structured(S))


def loads(text: str) -> FiniteSemigroup:
    """Parse a table in either format; a leading ``{`` selects the structured format."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("order:") or stripped.startswith("---"):
        return load_structured(text)
    return parse_sgp(text)


def parse_action(text: str) -> tuple[int, int, list[list[int]]]:
    """
    Parse an action table with header ``m |G|``.

    Returns:
        The number of points m, the group order, and the m×|G| table of point ids

    Raises:
        FormatError: On malformed headers, non-integer tokens or trailing garbage
    """
    tokens = _tokens(text)
    if len(tokens) < 2:
        raise FormatError("Action table needs a header 'm |G|'")

    m, g = _int_token(tokens[0]), _int_token(tokens[1])
    if m < 1 or g < 1:
        raise FormatError(f"Action header must be positive, got {m} {g}")

    body = tokens[2:]
    if len(body) != m * g:
        raise FormatError(f"Expected {m * g} action entries, got {len(body)}")

    values = [_int_token(tok) for tok in body]
    return m, g, [values[i * g : (i + 1) * g] for i in range(m)]


def dump_action(action: list[list[int]] | tuple[tuple[int, ...], ...]) -> str:
    """Render an action table with its ``m |G|`` header."""
    lines = [f"{len(action)} {len(action[0])}"]
    lines.extend(" ".join(str(x) for x in row) for row in action)
    return "\n".join(lines) + "\n"
