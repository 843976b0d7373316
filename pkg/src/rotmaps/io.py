"""Plain-text file formats and exports.

Three canonical formats, all 1-indexed, LF line endings, no trailing blank
lines; writers emit them byte-exactly and parsers are strict, so
parse(format(x)) == x is a hard guarantee:

* ``.rot``:  header ``n d``, then n rows of d space-separated vertex ids.
* ``.adj``:  n rows of n comma-separated 0/1 digits.
* ``.perm``: header ``N d``, then N*d lines ``v i w j`` pairing darts.

Plus one-way exports: DOT (undirected graph, each edge labeled with its two
ports) and JSON (``{"n":…,"d":…,"rot":[[…]]}``).
"""

from __future__ import annotations

import json

import numpy as np

from .core import Dart, RotationMatrix, to_full_form, validate
from .adjacency import AdjacencyMatrix
from .exceptions import MalformedInputError
from .shift import ShiftPermutation, verify_unitary

__all__ = [
    "format_rot",
    "parse_rot",
    "format_adj",
    "parse_adj",
    "format_perm",
    "parse_perm",
    "format_dot",
    "format_json",
]


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInputError(f"{what}: {token!r} is not an integer") from None


def format_rot(rot: RotationMatrix) -> str:
    lines = [f"{rot.num_vertices} {rot.degree}"]
    lines.extend(" ".join(str(int(w)) for w in row) for row in rot.entries)
    return "\n".join(lines) + "\n"


def parse_rot(text: str, *, require_valid_map: bool = True) -> RotationMatrix:
    """Strict parse of the .rot format.

    By default the parsed table must also be a valid map (that is part of
    the format contract); pass ``require_valid_map=False`` to get the raw
    table for diagnostic reporting.
    """
    lines = text.splitlines()
    if not lines:
        raise MalformedInputError("empty rotation file")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedInputError(f"header must be 'n d', got {lines[0]!r}")
    n = _parse_int(header[0], "header vertex count")
    d = _parse_int(header[1], "header degree")
    if n < 1 or d < 1:
        raise MalformedInputError(f"header values must be positive, got {n} {d}")
    if len(lines) - 1 != n:
        raise MalformedInputError(f"expected {n} rows after the header, got {len(lines) - 1}")
    rows = []
    for number, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if len(parts) != d:
            raise MalformedInputError(f"row {number}: expected {d} entries, got {len(parts)}")
        rows.append([_parse_int(p, f"row {number}") for p in parts])
    rot = RotationMatrix(np.array(rows, dtype=np.int64))
    if require_valid_map:
        report = validate(rot)
        if not report.is_valid_map:
            first = next(v for v in report.violations if v.kind != "duplicate-in-column")
            raise MalformedInputError(f"file does not describe a valid rotation map: {first}")
    return rot


def format_adj(adj: AdjacencyMatrix) -> str:
    return "\n".join(",".join(str(int(x)) for x in row) for row in adj.matrix) + "\n"


def parse_adj(text: str) -> AdjacencyMatrix:
    """Strict parse of the .adj format (symmetry and zero diagonal enforced)."""
    lines = text.splitlines()
    if not lines:
        raise MalformedInputError("empty adjacency file")
    n = len(lines)
    rows = []
    for number, line in enumerate(lines, start=1):
        parts = line.split(",")
        if len(parts) != n:
            raise MalformedInputError(
                f"row {number}: expected {n} comma-separated entries, got {len(parts)}"
            )
        row = []
        for token in parts:
            token = token.strip()
            if token not in ("0", "1"):
                raise MalformedInputError(f"row {number}: entry {token!r} is not 0 or 1")
            row.append(int(token))
        rows.append(row)
    return AdjacencyMatrix(np.array(rows, dtype=np.int64))


def format_perm(shift: ShiftPermutation) -> str:
    lines = [f"{shift.num_vertices} {shift.degree}"]
    for index in range(1, shift.size + 1):
        v, i = shift.dart_at(index)
        w, j = shift.dart_at(shift.apply(index))
        lines.append(f"{v} {i} {w} {j}")
    return "\n".join(lines) + "\n"


def parse_perm(text: str) -> ShiftPermutation:
    """Strict parse of the .perm format; the pairs must form an involutive permutation."""
    lines = text.splitlines()
    if not lines:
        raise MalformedInputError("empty permutation file")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedInputError(f"header must be 'N d', got {lines[0]!r}")
    n = _parse_int(header[0], "header vertex count")
    d = _parse_int(header[1], "header degree")
    if n < 1 or d < 1:
        raise MalformedInputError(f"header values must be positive, got {n} {d}")
    size = n * d
    if len(lines) - 1 != size:
        raise MalformedInputError(f"expected {size} dart lines, got {len(lines) - 1}")
    images = np.zeros(size, dtype=np.int64)
    seen = np.zeros(size, dtype=bool)
    for number, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if len(parts) != 4:
            raise MalformedInputError(f"line {number}: expected 'v i w j', got {line!r}")
        v, i, w, j = (_parse_int(p, f"line {number}") for p in parts)
        if not (1 <= v <= n and 1 <= i <= d and 1 <= w <= n and 1 <= j <= d):
            raise MalformedInputError(f"line {number}: dart out of range: {line!r}")
        src = (v - 1) * d + i
        if seen[src - 1]:
            raise MalformedInputError(f"line {number}: dart ({v}, {i}) listed twice")
        seen[src - 1] = True
        images[src - 1] = (w - 1) * d + j
    shift = ShiftPermutation(num_vertices=n, degree=d, images=images)
    if not verify_unitary(shift):
        raise MalformedInputError("dart pairs do not form an involutive permutation")
    return shift


def format_dot(rot: RotationMatrix) -> str:
    """Undirected DOT graph; each edge carries its two ports as label "i|j".

    The lower-numbered endpoint's port comes first.
    """
    table = to_full_form(rot)
    lines = ["graph G {"]
    for v in range(1, rot.num_vertices + 1):
        for i in range(1, rot.degree + 1):
            w, j = table.image(Dart(v, i))
            if v < w:
                lines.append(f'  {v} -- {w} [label="{i}|{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_json(rot: RotationMatrix) -> str:
    payload = {"n": rot.num_vertices, "d": rot.degree, "rot": rot.entries.tolist()}
    return json.dumps(payload, separators=(",", ":")) + "\n"
