"""Readers for the two polytope input formats.

JSON::

    {"dim": 2, "vertices": [[1, 0], [0, 1], [-1, -1]], "divisor": [0, 0, 0]}

``divisor`` is optional and indexed by facets in lexicographic normal order.

Matrix (PALP-style)::

    2 3
    1 0 -1
    0 1 -1

The header holds the row and column counts; anything after them on the
header line is ignored.  With ``rows <= cols`` the points are the columns;
otherwise the points are the rows.
"""

from dataclasses import dataclass
import json

from .errors import DimensionMismatch, ParseError, ShapeMismatch

__all__ = ["InputDocument", "parse_json", "parse_matrix", "parse_document"]


@dataclass(frozen=True)
class InputDocument:
    format: str
    dim: int
    vertices: tuple
    divisor: tuple = None


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    return x


def parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if "dim" not in doc:
        raise ParseError('missing field "dim"')
    if "vertices" not in doc:
        raise ParseError('missing field "vertices"')
    dim = _int(doc["dim"], '"dim"')
    if dim < 1:
        raise ParseError(f'"dim" must be positive, got {dim}')
    rows = doc["vertices"]
    if not isinstance(rows, list):
        raise ParseError('"vertices" must be an array of integer arrays')
    vertices = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f'"vertices"[{i}] is not an array')
        if len(row) != dim:
            raise DimensionMismatch(
                f'"vertices"[{i}] has length {len(row)}, expected dim={dim}')
        vertices.append(tuple(_int(x, f'"vertices"[{i}]') for x in row))
    if len(vertices) < dim + 1:
        raise ParseError(f"need at least {dim + 1} vertices, got {len(vertices)}")
    divisor = doc.get("divisor")
    if divisor is not None:
        if not isinstance(divisor, list):
            raise ParseError('"divisor" must be an array of integers')
        divisor = tuple(_int(x, '"divisor"') for x in divisor)
    return InputDocument("json", dim, tuple(vertices), divisor)


def parse_matrix(text):
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("line 1: empty document")
    try:
        rows, cols = int(lines[0][0]), int(lines[0][1])
    except (IndexError, ValueError):
        raise ParseError('line 1: header must start with two integers "d k"') from None
    if rows < 1 or cols < 1:
        raise ParseError(f"line 1: non-positive shape {rows} x {cols}")
    body = lines[1:1 + rows]
    if len(body) < rows:
        raise ShapeMismatch(f"header announces {rows} rows, found {len(body)}")
    matrix = []
    for i, ln in enumerate(body, start=2):
        if len(ln) != cols:
            raise ShapeMismatch(f"line {i}: expected {cols} entries, found {len(ln)}")
        try:
            matrix.append([int(x) for x in ln])
        except ValueError:
            raise ParseError(f"line {i}: non-integer entry") from None
    if rows <= cols:
        points = tuple(zip(*matrix))
        dim = rows
    else:
        points = tuple(tuple(r) for r in matrix)
        dim = cols
    if len(points) < dim + 1:
        raise ParseError(f"need at least {dim + 1} points, got {len(points)}")
    return InputDocument("matrix", dim, points)


def parse_document(text, fmt=None):
    """Dispatch on ``fmt`` or, when None, on the first non-blank character."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "matrix"
    if fmt == "json":
        return parse_json(text)
    if fmt == "matrix":
        return parse_matrix(text)
    raise ParseError(f"unknown input format {fmt!r}")
