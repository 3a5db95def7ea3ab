"""Simplex files: a small JSON document with ``dimension``, ``vertices`` and an optional ``label``.

Vertices are written with 17 significant digits so a write/read round trip
is bit-exact.
"""
from __future__ import annotations

import json
import math
import sys

from .simplex import Simplex, as_simplex


class ParseError(ValueError):
    exit_code = 2


def parse_simplex(text: str) -> tuple[Simplex, str | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a valid simplex document: {exc}") from None
    if not isinstance(doc, dict) or "dimension" not in doc or "vertices" not in doc:
        raise ParseError("simplex document needs 'dimension' and 'vertices'")
    n = doc["dimension"]
    rows = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"dimension must be a positive integer, got {n!r}")
    if not isinstance(rows, list) or len(rows) != n + 1:
        raise ParseError(f"expected {n + 1} vertices for dimension {n}")
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"every vertex needs {n} coordinates, got {row!r}")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
                raise ParseError(f"non-finite or non-numeric coordinate {x!r}")
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("label must be a string")
    return Simplex([[float(x) for x in row] for row in rows]), label


def read_simplex_file(path: str) -> tuple[Simplex, str | None]:
    if path == "-":
        return parse_simplex(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_simplex(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _num(x: float) -> str:
    text = format(float(x), ".17g")
    # keep a float marker so "-0" comes back as -0.0, not the integer 0
    return text if any(c in text for c in ".e") else text + ".0"


def format_simplex(V, label: str | None = None) -> str:
    V = as_simplex(V)
    rows = ",\n".join("    [" + ", ".join(_num(x) for x in row) + "]" for row in V.vertices)
    head = [f'  "dimension": {V.dim},']
    if label is not None:
        head.append(f'  "label": {json.dumps(label)},')
    return "{\n" + "\n".join(head) + '\n  "vertices": [\n' + rows + "\n  ]\n}\n"


def write_simplex_file(path: str, V, label: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_simplex(V, label))
