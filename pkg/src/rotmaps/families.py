"""Closed-form consistent rotation maps for standard graph families.

Each generator fixes one orientation convention once and for all, so the
tables it emits are reproducible byte for byte.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .core import RotationMatrix
from .exceptions import ParameterError
from .product import cartesian_rotation

__all__ = [
    "FamilySpec",
    "cycle",
    "complete",
    "complete_bipartite",
    "generalized_petersen",
    "k2",
    "hypercube",
]


def cycle(n: int) -> RotationMatrix:
    """n-cycle: port 1 walks to the successor, port 2 back to the predecessor."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    v = np.arange(1, n + 1, dtype=np.int64)
    return RotationMatrix(np.column_stack([v % n + 1, (v - 2) % n + 1]))


def complete(n: int) -> RotationMatrix:
    """Complete graph: port i of vertex v steps i places around the circle.

    Columns 1 and n-1 coincide with the two cycle columns.
    """
    if n < 3:
        raise ParameterError(f"complete graph needs n >= 3, got {n}")
    v = np.arange(1, n + 1, dtype=np.int64)[:, None]
    i = np.arange(1, n, dtype=np.int64)[None, :]
    return RotationMatrix((v - 1 + i) % n + 1)


def complete_bipartite(n: int) -> RotationMatrix:
    """K(n,n) on 2n vertices, left side 1..n, right side n+1..2n.

    Port 1 is the horizontal edge (v to n+v), then ports advance around the
    opposite side; the right side mirrors the same pattern back.
    """
    if n < 2:
        raise ParameterError(f"complete bipartite graph needs n >= 2, got {n}")
    v = np.arange(1, n + 1, dtype=np.int64)[:, None]
    k = np.arange(1, n + 1, dtype=np.int64)[None, :]
    left = n + (v + k - 2) % n + 1
    right = (v + k - 2) % n + 1
    return RotationMatrix(np.vstack([left, right]))


def generalized_petersen(n: int, s: int) -> RotationMatrix:
    """GP(n, s): outer n-cycle, spokes on port 2, inner cycle stepped by s.

    Cubic on 2n vertices.  Port 1 advances along the own ring (outer by 1,
    inner by s), port 3 goes back; the spoke j <-> n+j carries port 2 at
    both ends.
    """
    if n < 3:
        raise ParameterError(f"generalized Petersen graph needs n >= 3, got {n}")
    max_s = (n - 1) // 2
    if not 1 <= s <= max_s:
        extra = " (2s = n would double the inner edges)" if 2 * s == n else ""
        raise ParameterError(f"inner step s={s} outside 1..{max_s} for n={n}{extra}")
    j = np.arange(1, n + 1, dtype=np.int64)
    outer = np.column_stack([j % n + 1, n + j, (j - 2) % n + 1])
    inner = np.column_stack([n + (j - 1 + s) % n + 1, j, n + (j - 1 - s) % n + 1])
    return RotationMatrix(np.vstack([outer, inner]))


def k2() -> RotationMatrix:
    """The single edge on two vertices: the unique 1-regular map."""
    return RotationMatrix(np.array([[2], [1]], dtype=np.int64))


def hypercube(m: int) -> RotationMatrix:
    """m-dimensional cube as an iterated product of single edges.

    Left fold of the box product over m copies of the edge; port t flips
    coordinate t, with coordinate m indexing the outermost clouds.
    """
    if m < 1:
        raise ParameterError(f"hypercube needs dimension >= 1, got {m}")
    rot = k2()
    for _ in range(m - 1):
        rot = cartesian_rotation(rot, k2())
    return rot


_ALIASES = {
    "cycle": "cycle",
    "complete": "complete",
    "complete-bipartite": "complete-bipartite",
    "generalized-petersen": "generalized-petersen",
    "gp": "generalized-petersen",
    "k2": "k2",
    "hypercube": "hypercube",
}


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters, dispatched by :meth:`build`.

    ``n`` is the vertex parameter (per side for complete-bipartite), ``s``
    the inner step of generalized Petersen graphs, ``dimension`` the
    hypercube dimension.  Parameter domains are enforced by the generators.
    """

    family: str
    n: int | None = None
    s: int | None = None
    dimension: int | None = None

    def __post_init__(self):
        if self.family not in _ALIASES:
            raise ParameterError(
                f"unknown family {self.family!r}; expected one of {sorted(set(_ALIASES))}"
            )
        object.__setattr__(self, "family", _ALIASES[self.family])

    def build(self) -> RotationMatrix:
        if self.family == "generalized-petersen":
            if self.n is None or self.s is None:
                raise ParameterError("generalized Petersen graphs need both n and s")
            return generalized_petersen(self.n, self.s)
        if self.family == "hypercube":
            if self.dimension is None:
                raise ParameterError("hypercubes need a dimension")
            return hypercube(self.dimension)
        if self.family == "k2":
            return k2()
        if self.n is None:
            raise ParameterError(f"family {self.family} needs n")
        maker = {
            "cycle": cycle,
            "complete": complete,
            "complete-bipartite": complete_bipartite,
        }[self.family]
        return maker(self.n)
