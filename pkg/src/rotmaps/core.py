"""Rotation maps in matrix form and full involution form, plus structural checks.

A rotation map records, for every vertex v and every port i in 1..d, which
vertex the i-th edge leaving v enters.  The matrix form keeps only that
endpoint; the full form also keeps the port under which the edge comes back.
A map is *consistent* when every vertex receives its d incoming edges under
d pairwise distinct ports, which for a valid map is the same as every column
of the matrix form being a permutation of the vertex set.

All vertex ids and ports are 1-indexed, here and in every file format.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, NamedTuple

import numpy as np

from .exceptions import InvalidRotationMapError, MalformedInputError

__all__ = [
    "Dart",
    "RotationMatrix",
    "RotationTable",
    "Violation",
    "ValidationReport",
    "validate",
    "is_consistent",
    "to_full_form",
    "incoming_labels",
]


class Dart(NamedTuple):
    """One directed half-edge: a vertex together with one of its ports."""

    vertex: int
    port: int


@dataclasses.dataclass(frozen=True, eq=False)
class RotationMatrix:
    """Matrix form of a rotation map.

    ``entries[v-1, i-1] == w`` says the i-th edge leaving vertex v enters
    vertex w.  The table is copied and made read-only at construction.
    Construction only enforces shape and value range; use :func:`validate`
    for the structural checks (self-loops, row duplicates, symmetry).
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries)
        if arr.ndim != 2:
            raise MalformedInputError(
                f"rotation table must be two-dimensional, got shape {arr.shape}"
            )
        n, d = arr.shape
        if n < 2:
            raise MalformedInputError(f"a rotation map needs at least 2 vertices, got {n}")
        if d < 1:
            raise MalformedInputError("a rotation map needs degree at least 1")
        if not np.issubdtype(arr.dtype, np.integer):
            raise MalformedInputError("rotation table entries must be integers")
        arr = arr.astype(np.int64)
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 1 or hi > n:
            bad = lo if lo < 1 else hi
            raise MalformedInputError(f"vertex id {bad} outside 1..{n} in rotation table")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def num_vertices(self) -> int:
        return int(self.entries.shape[0])

    @property
    def degree(self) -> int:
        return int(self.entries.shape[1])

    def row(self, v: int) -> np.ndarray:
        """Endpoints of the edges leaving vertex v, in port order."""
        self._check_vertex(v)
        return self.entries[v - 1]

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.num_vertices:
            raise MalformedInputError(f"vertex {v} outside 1..{self.num_vertices}")

    def __eq__(self, other):
        if not isinstance(other, RotationMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"RotationMatrix(num_vertices={self.num_vertices}, degree={self.degree})"


@dataclasses.dataclass(frozen=True, eq=False)
class RotationTable:
    """Full involution form: every dart (v, i) is paired with a partner (w, j).

    ``entries`` is the same table as the matrix form; ``ports`` holds the
    return port j for each dart.  Built by :func:`to_full_form`.
    """

    entries: np.ndarray
    ports: np.ndarray

    def __post_init__(self):
        ports = np.asarray(self.ports).astype(np.int64)
        if ports.shape != self.entries.shape:
            raise MalformedInputError(
                f"port table shape {ports.shape} does not match entry table {self.entries.shape}"
            )
        ports.setflags(write=False)
        object.__setattr__(self, "ports", ports)

    @property
    def num_vertices(self) -> int:
        return int(self.entries.shape[0])

    @property
    def degree(self) -> int:
        return int(self.entries.shape[1])

    def image(self, dart) -> Dart:
        """The partner dart of ``dart`` under the map."""
        v, i = dart
        if not (1 <= v <= self.num_vertices and 1 <= i <= self.degree):
            raise MalformedInputError(f"dart ({v}, {i}) out of range")
        return Dart(int(self.entries[v - 1, i - 1]), int(self.ports[v - 1, i - 1]))

    __call__ = image

    def darts(self) -> Iterator[Dart]:
        """All darts in row-major (vertex, port) order."""
        for v in range(1, self.num_vertices + 1):
            for i in range(1, self.degree + 1):
                yield Dart(v, i)

    def matrix_form(self) -> RotationMatrix:
        """Drop the return ports, recovering the matrix form."""
        return RotationMatrix(self.entries)


@dataclasses.dataclass(frozen=True)
class Violation:
    """One structural defect, located with 1-indexed coordinates.

    kind / location pairs:
      ``self-loop``            (row, column)
      ``duplicate-in-row``     (row, vertex)
      ``asymmetric-incidence`` (row, vertex)
      ``duplicate-in-column``  (column, vertex)
    """

    kind: str
    location: tuple[int, int]
    message: str

    def __str__(self):
        return self.message


MAP_VIOLATION_KINDS = ("self-loop", "duplicate-in-row", "asymmetric-incidence")


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`: map validity, consistency, and every defect found."""

    is_valid_map: bool
    is_consistent: bool
    violations: tuple[Violation, ...]

    def of_kind(self, kind: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.kind == kind)


def validate(rot: RotationMatrix) -> ValidationReport:
    """Report every structural defect of a rotation table.

    The map is valid when it describes a simple regular graph: no self-loops,
    no repeated entry within a row, and w appears in row v exactly as often
    as v appears in row w.  It is additionally consistent when every column
    is a permutation of the vertex set, i.e. no vertex repeats in a column.
    """
    ent = rot.entries
    n, d = ent.shape
    violations: list[Violation] = []

    ids = np.arange(1, n + 1)
    for r, c in zip(*np.nonzero(ent == ids[:, None])):
        violations.append(
            Violation("self-loop", (int(r) + 1, int(c) + 1),
                      f"self-loop at row {r + 1}, column {c + 1}")
        )

    for v in range(n):
        vals, counts = np.unique(ent[v], return_counts=True)
        for w, k in zip(vals[counts > 1], counts[counts > 1]):
            violations.append(
                Violation("duplicate-in-row", (v + 1, int(w)),
                          f"duplicate-in-row at row {v + 1}: vertex {w} appears {k} times")
            )

    # incidence counts[v][w] = number of times w is listed in row v
    counts = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        np.add.at(counts[v], ent[v] - 1, 1)
    for v, w in zip(*np.nonzero(counts > counts.T)):
        violations.append(
            Violation(
                "asymmetric-incidence", (int(v) + 1, int(w) + 1),
                f"asymmetric-incidence at row {v + 1}: vertex {w + 1} appears "
                f"{counts[v, w]} times but row {w + 1} lists vertex {v + 1} "
                f"{counts[w, v]} times",
            )
        )

    for i in range(d):
        vals, cnt = np.unique(ent[:, i], return_counts=True)
        for w, k in zip(vals[cnt > 1], cnt[cnt > 1]):
            violations.append(
                Violation("duplicate-in-column", (i + 1, int(w)),
                          f"duplicate-in-column at column {i + 1}: vertex {w} appears {k} times")
            )

    n_structural = sum(v.kind in MAP_VIOLATION_KINDS for v in violations)
    is_valid = n_structural == 0
    return ValidationReport(
        is_valid_map=is_valid,
        is_consistent=is_valid and len(violations) == 0,
        violations=tuple(violations),
    )


def _require_valid(rot: RotationMatrix) -> ValidationReport:
    """Validate and raise if the table is not a valid rotation map."""
    report = validate(rot)
    if not report.is_valid_map:
        structural = [v for v in report.violations if v.kind in MAP_VIOLATION_KINDS]
        extra = f" (+{len(structural) - 1} more)" if len(structural) > 1 else ""
        raise InvalidRotationMapError(
            f"not a valid rotation map: {structural[0]}{extra}",
            violations=report.violations,
        )
    return report


def is_consistent(rot: RotationMatrix) -> bool:
    """True when every column of the (valid) map is a permutation of the vertex set."""
    return _require_valid(rot).is_consistent


def to_full_form(rot: RotationMatrix) -> RotationTable:
    """Recover the return ports: the partner of (v, i) is (w, j) where row w lists v at port j.

    Requires a valid map; there the partner port is unique because v appears
    exactly once in row w.  The result is an involution on all darts.
    """
    _require_valid(rot)
    ent = rot.entries
    n, d = ent.shape
    ports = np.zeros((n, d), dtype=np.int64)
    for v in range(1, n + 1):
        for i in range(1, d + 1):
            w = int(ent[v - 1, i - 1])
            hits = np.nonzero(ent[w - 1] == v)[0]
            if hits.size != 1:  # unreachable for valid maps
                raise InvalidRotationMapError(
                    f"vertex {v} appears {hits.size} times in row {w}; cannot recover the return port"
                )
            ports[v - 1, i - 1] = int(hits[0]) + 1
    return RotationTable(entries=ent, ports=ports)


def incoming_labels(rot: RotationMatrix, w: int) -> list[int]:
    """Ports under which edges enter w, as a sorted list (duplicates kept).

    Always has exactly ``degree`` elements for a valid map; the map is
    consistent at w exactly when they are pairwise distinct.
    """
    _require_valid(rot)
    rot._check_vertex(w)
    cols = np.nonzero(rot.entries == w)[1] + 1
    return sorted(int(c) for c in cols)
