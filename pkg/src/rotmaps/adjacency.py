"""Adjacency-matrix algebra for simple regular graphs.

Covers the round trip between rotation maps and dense adjacency matrices,
the Kronecker-sum Cartesian product, spectra via cyclic Jacobi sweeps, and
the structural checks on products (vertex count, regularity, edge count,
spectrum additivity).  Matrices are dense; the intended scale is a few
hundred vertices.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from ._kernels import jacobi_eigenvalues
from .core import RotationMatrix, _require_valid, is_consistent
from .exceptions import (
    ConvergenceError,
    MalformedInputError,
    RegularityError,
    UnsupportedDegreeError,
)

__all__ = [
    "AdjacencyMatrix",
    "Spectrum",
    "ProductPropertyReport",
    "rotation_from_adjacency",
    "adjacency_from_rotation",
    "check_row_scan_inconsistency",
    "cartesian_adjacency",
    "spectrum",
    "sum_spectra",
    "spectrum_deviation",
    "product_property_check",
]


@dataclasses.dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Dense symmetric 0/1 adjacency matrix of a simple graph on >= 2 vertices.

    Symmetry and a zero diagonal are enforced at construction; regularity is
    checked on demand by :meth:`degree`.
    """

    matrix: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.matrix)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MalformedInputError(f"adjacency matrix must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n < 2:
            raise MalformedInputError(f"adjacency matrix needs at least 2 vertices, got {n}")
        if not np.issubdtype(arr.dtype, np.integer):
            raise MalformedInputError("adjacency entries must be integers")
        arr = arr.astype(np.int64)
        if not np.isin(arr, (0, 1)).all():
            raise MalformedInputError("adjacency entries must be 0 or 1")
        if np.any(np.diag(arr) != 0):
            v = int(np.nonzero(np.diag(arr))[0][0]) + 1
            raise MalformedInputError(f"nonzero diagonal at vertex {v} (self-loops not allowed)")
        if not np.array_equal(arr, arr.T):
            v, w = (int(x) + 1 for x in np.argwhere(arr != arr.T)[0])
            raise MalformedInputError(f"adjacency matrix not symmetric at ({v}, {w})")
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @property
    def order(self) -> int:
        return int(self.matrix.shape[0])

    def degree(self) -> int:
        """Common row sum; raises RegularityError when rows disagree."""
        sums = self.matrix.sum(axis=1)
        if not np.all(sums == sums[0]):
            raise RegularityError(
                f"graph is not regular: vertex degrees range over {sorted(set(int(s) for s in sums))}"
            )
        return int(sums[0])

    def edge_count(self) -> int:
        return int(self.matrix.sum()) // 2

    def neighbors(self, v: int) -> np.ndarray:
        """Neighbors of v in increasing order (1-indexed)."""
        if not 1 <= v <= self.order:
            raise MalformedInputError(f"vertex {v} outside 1..{self.order}")
        return np.nonzero(self.matrix[v - 1])[0] + 1

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool(
            np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self):
        return hash((self.matrix.shape, self.matrix.tobytes()))

    def __repr__(self):
        return f"AdjacencyMatrix(order={self.order})"


@dataclasses.dataclass(frozen=True, eq=False)
class Spectrum:
    """All eigenvalues of a symmetric matrix, sorted nonincreasing.

    ``tolerance`` records the accuracy target the values were computed to.
    """

    values: np.ndarray
    tolerance: float

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise MalformedInputError(f"spectrum must be a nonempty vector, got shape {vals.shape}")
        if np.any(np.diff(vals) > 0):
            raise MalformedInputError("spectrum values must be sorted nonincreasing")
        if self.tolerance < 0:
            raise MalformedInputError("tolerance must be nonnegative")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return int(self.values.size)

    def __repr__(self):
        return f"Spectrum(size={len(self)}, tolerance={self.tolerance:g})"


def rotation_from_adjacency(adj: AdjacencyMatrix) -> RotationMatrix:
    """Row-scan reading: row v lists the neighbors of v in increasing order.

    Always yields a valid map, but for connected graphs of degree >= 2 never
    a consistent one: every neighbor of vertex 1 lists vertex 1 first, so
    vertex 1 repeats in column 1 (and likewise the last vertex in the last
    column).
    """
    d = adj.degree()
    if d < 1:
        raise RegularityError("graph has no edges; nothing to read")
    rows = [adj.neighbors(v) for v in range(1, adj.order + 1)]
    return RotationMatrix(np.vstack(rows))


def adjacency_from_rotation(rot: RotationMatrix) -> AdjacencyMatrix:
    """Adjacency matrix of the graph a valid rotation map describes."""
    _require_valid(rot)
    n = rot.num_vertices
    arr = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        arr[v, rot.entries[v] - 1] = 1
    return AdjacencyMatrix(arr)


def check_row_scan_inconsistency(adj: AdjacencyMatrix) -> bool:
    """True when the row-scan reading of ``adj`` is inconsistent.

    Only defined for degree >= 2: degree-1 graphs (perfect matchings) can
    come out consistent, e.g. a single edge reads as [[2], [1]].
    """
    if adj.degree() < 2:
        raise UnsupportedDegreeError(
            "row-scan inconsistency check needs degree >= 2; degree-1 readings can be consistent"
        )
    return not is_consistent(rotation_from_adjacency(adj))


def cartesian_adjacency(a1: AdjacencyMatrix, a2: AdjacencyMatrix) -> AdjacencyMatrix:
    """Box-product adjacency as a Kronecker sum, in cloud-compatible vertex order.

    Product vertex (i-1)*|V1| + j stands for vertex j of the first factor
    inside copy i, so consecutive index ranges are copies of the first
    factor, exactly as the rotation-map product lays its clouds out.  In
    that numbering the Kronecker sum reads A2 (x) I + I (x) A1; the swapped
    ordering would enumerate copies of the second factor instead and differ
    by a shuffle relabeling.
    """
    a1.degree()
    a2.degree()
    n1, n2 = a1.order, a2.order
    out = np.kron(a2.matrix, np.eye(n1, dtype=np.int64)) + np.kron(
        np.eye(n2, dtype=np.int64), a1.matrix
    )
    return AdjacencyMatrix(out)


def spectrum(adj: AdjacencyMatrix, tol: float = 1e-10, *, max_sweeps: int = 60,
             backend: str | None = None) -> Spectrum:
    """All eigenvalues of the adjacency matrix, nonincreasing.

    Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm is at
    most ``tol``; raises ConvergenceError (with the residual) if the sweep
    budget runs out first.
    """
    if tol <= 0:
        raise MalformedInputError("tolerance must be positive")
    values, sweeps, off = jacobi_eigenvalues(adj.matrix, tol, max_sweeps, backend)
    if off > tol:
        raise ConvergenceError(
            f"Jacobi sweeps stuck at off-diagonal norm {off:.3e} after {sweeps} sweeps (target {tol:g})",
            residual=off,
        )
    return Spectrum(values=np.sort(values)[::-1], tolerance=tol)


def sum_spectra(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Multiset of pairwise sums {x + y}, sorted nonincreasing."""
    sums = (s1.values[:, None] + s2.values[None, :]).ravel()
    return Spectrum(values=np.sort(sums)[::-1], tolerance=s1.tolerance + s2.tolerance)


def spectrum_deviation(s1: Spectrum, s2: Spectrum) -> float:
    """Largest elementwise gap between two sorted spectra; inf on size mismatch."""
    if len(s1) != len(s2):
        return float("inf")
    return float(np.max(np.abs(s1.values - s2.values)))


@dataclasses.dataclass(frozen=True)
class ProductPropertyReport:
    """Checked guarantees of a box product against its factors."""

    vertices_expected: int
    vertices_actual: int
    degree_expected: int
    degree_actual: int
    edges_expected: int
    edges_actual: int
    spectrum_deviation: float
    spectrum_tolerance: float

    @property
    def vertices_ok(self) -> bool:
        return self.vertices_actual == self.vertices_expected

    @property
    def degree_ok(self) -> bool:
        return self.degree_actual == self.degree_expected

    @property
    def edges_ok(self) -> bool:
        return self.edges_actual == self.edges_expected

    @property
    def spectrum_ok(self) -> bool:
        return self.spectrum_deviation <= self.spectrum_tolerance

    @property
    def all_hold(self) -> bool:
        return self.vertices_ok and self.degree_ok and self.edges_ok and self.spectrum_ok

    def failures(self) -> tuple[str, ...]:
        failed = []
        if not self.vertices_ok:
            failed.append("vertex-count")
        if not self.degree_ok:
            failed.append("regularity")
        if not self.edges_ok:
            failed.append("edge-count")
        if not self.spectrum_ok:
            failed.append("spectrum-additivity")
        return tuple(failed)


def product_property_check(a1: AdjacencyMatrix, a2: AdjacencyMatrix, *,
                           spectrum_tol: float = 1e-8, jacobi_tol: float = 1e-10,
                           backend: str | None = None) -> ProductPropertyReport:
    """Verify the four box-product guarantees on cartesian_adjacency(a1, a2).

    Vertex count |V1|*|V2|, regularity d1+d2, edge count |V1|*|V2|*(d1+d2)/2,
    and additivity of the spectrum: the sorted product spectrum must match
    the sorted multiset {x + y} over factor eigenvalues within
    ``spectrum_tol``.
    """
    d1, d2 = a1.degree(), a2.degree()
    prod = cartesian_adjacency(a1, a2)
    expected_spec = sum_spectra(
        spectrum(a1, jacobi_tol, backend=backend),
        spectrum(a2, jacobi_tol, backend=backend),
    )
    actual_spec = spectrum(prod, jacobi_tol, backend=backend)
    return ProductPropertyReport(
        vertices_expected=a1.order * a2.order,
        vertices_actual=prod.order,
        degree_expected=d1 + d2,
        degree_actual=prod.degree(),
        edges_expected=a1.order * a2.order * (d1 + d2) // 2,
        edges_actual=prod.edge_count(),
        spectrum_deviation=spectrum_deviation(actual_spec, expected_spec),
        spectrum_tolerance=spectrum_tol,
    )
