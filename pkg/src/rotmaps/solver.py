"""Consistent labelings for arbitrary regular graphs, two independent ways.

A consistent rotation map is the same thing as assigning each directed arc a
label in 1..d such that labels are pairwise distinct both leaving and
entering every vertex.  Two solvers cross-check each other:

* an exhaustive backtracking search over arcs in lexicographic order
  (complete but exponential in the worst case, meant for small graphs);
* a polynomial constructor that peels the arc set into d perfect matchings
  of the out-side/in-side bipartite graph (the residual graph stays regular,
  so a perfect matching always exists), assigning one label per matching.
"""

from __future__ import annotations

import numpy as np

from .adjacency import AdjacencyMatrix, adjacency_from_rotation
from .core import RotationMatrix, is_consistent
from .exceptions import (
    MalformedInputError,
    RegularityError,
    RotmapsError,
    SearchBudgetExceededError,
)

__all__ = [
    "ArcLabeling",
    "solve_backtracking",
    "solve_matching",
    "agree",
]

DEFAULT_BUDGET = 1_000_000


class ArcLabeling:
    """Partial assignment of labels to directed arcs of a graph.

    Maintains the two defining constraints incrementally: labels on arcs
    leaving a vertex are distinct, and labels on arcs entering a vertex are
    distinct.  A completed labeling is exactly a consistent rotation map.
    """

    def __init__(self, adjacency: AdjacencyMatrix):
        self._adjacency = adjacency
        self._n = adjacency.order
        self._degree = adjacency.degree()
        self._labels: dict[tuple[int, int], int] = {}
        self._out_used = [0] * (self._n + 1)  # bitmask of labels leaving v
        self._in_used = [0] * (self._n + 1)   # bitmask of labels entering w

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def num_assigned(self) -> int:
        return len(self._labels)

    @property
    def is_complete(self) -> bool:
        return len(self._labels) == self._n * self._degree

    def label_of(self, v: int, w: int) -> int | None:
        return self._labels.get((v, w))

    def can_assign(self, v: int, w: int, label: int) -> bool:
        if not (1 <= label <= self._degree and 1 <= v <= self._n and 1 <= w <= self._n):
            return False
        if self._adjacency.matrix[v - 1, w - 1] != 1 or (v, w) in self._labels:
            return False
        bit = 1 << label
        return not (self._out_used[v] & bit or self._in_used[w] & bit)

    def assign(self, v: int, w: int, label: int) -> None:
        if not self.can_assign(v, w, label):
            raise MalformedInputError(
                f"cannot label arc ({v}, {w}) with {label}: "
                "not an unlabeled arc, or label already used at an endpoint"
            )
        self._labels[(v, w)] = label
        bit = 1 << label
        self._out_used[v] |= bit
        self._in_used[w] |= bit

    def unassign(self, v: int, w: int) -> None:
        label = self._labels.pop((v, w), None)
        if label is None:
            raise MalformedInputError(f"arc ({v}, {w}) carries no label")
        bit = 1 << label
        self._out_used[v] &= ~bit
        self._in_used[w] &= ~bit

    def to_rotation_matrix(self) -> RotationMatrix:
        if not self.is_complete:
            raise MalformedInputError(
                f"labeling covers {self.num_assigned} of {self._n * self._degree} arcs"
            )
        entries = np.zeros((self._n, self._degree), dtype=np.int64)
        for (v, w), label in self._labels.items():
            entries[v - 1, label - 1] = w
        return RotationMatrix(entries)


def _checked_degree(adjacency: AdjacencyMatrix) -> int:
    d = adjacency.degree()
    if d < 1:
        raise RegularityError("graph has no edges; nothing to label")
    return d


def solve_backtracking(adjacency: AdjacencyMatrix, budget: int = DEFAULT_BUDGET) -> RotationMatrix:
    """Exhaustive search for a consistent map, deterministic and complete.

    Arcs are visited in lexicographic (v, w) order and labels tried in
    ascending order, so the first solution found is a fixed function of the
    input.  ``budget`` caps the number of search nodes (one per arc visit);
    exceeding it raises SearchBudgetExceededError, which is an inconclusive
    outcome, not evidence that no labeling exists (one always does).
    """
    d = _checked_degree(adjacency)
    arcs = [
        (v, int(w))
        for v in range(1, adjacency.order + 1)
        for w in adjacency.neighbors(v)
    ]
    labeling = ArcLabeling(adjacency)

    # explicit stack instead of recursion; next_try[k] is the label to resume
    # from when position k is revisited after a backtrack
    n_arcs = len(arcs)
    next_try = [1] * (n_arcs + 1)
    pos = 0
    nodes = 1  # entering position 0
    if nodes > budget:
        raise SearchBudgetExceededError(
            f"backtracking budget of {budget} nodes exhausted", nodes_explored=nodes
        )
    while pos < n_arcs:
        v, w = arcs[pos]
        label = next_try[pos]
        while label <= d and not labeling.can_assign(v, w, label):
            label += 1
        if label <= d:
            labeling.assign(v, w, label)
            next_try[pos] = label + 1
            pos += 1
            next_try[pos] = 1
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceededError(
                    f"backtracking budget of {budget} nodes exhausted", nodes_explored=nodes
                )
        else:
            if pos == 0:  # unreachable for a valid regular adjacency matrix
                raise RotmapsError("search space exhausted without a labeling")
            pos -= 1
            labeling.unassign(*arcs[pos])
    return labeling.to_rotation_matrix()


def solve_matching(adjacency: AdjacencyMatrix) -> RotationMatrix:
    """Polynomial construction: one perfect matching of the arc set per label.

    Round r finds a perfect matching between out-sides and in-sides among
    the still-unlabeled arcs (augmenting-path search, ascending scan order)
    and labels its arcs r.  Removing a perfect matching from a regular
    bipartite graph keeps it regular, so every round succeeds.
    """
    d = _checked_degree(adjacency)
    n = adjacency.order
    remaining = [[]] + [[int(w) for w in adjacency.neighbors(v)] for v in range(1, n + 1)]
    labeling = ArcLabeling(adjacency)

    for label in range(1, d + 1):
        match_in = [0] * (n + 1)
        match_out = [0] * (n + 1)

        def augment(u: int, seen: set[int]) -> bool:
            for w in remaining[u]:
                if w in seen:
                    continue
                seen.add(w)
                if match_in[w] == 0 or augment(match_in[w], seen):
                    match_in[w] = u
                    match_out[u] = w
                    return True
            return False

        for u in range(1, n + 1):
            if not augment(u, set()):  # unreachable: residual graph is regular bipartite
                raise RotmapsError(f"no perfect matching among remaining arcs in round {label}")
        for v in range(1, n + 1):
            w = match_out[v]
            labeling.assign(v, w, label)
            remaining[v].remove(w)

    return labeling.to_rotation_matrix()


def agree(adjacency: AdjacencyMatrix, budget: int = DEFAULT_BUDGET) -> bool | None:
    """Cross-check the two solvers on one input.

    True when both produce consistent maps of the given graph (the maps need
    not be equal); None when the backtracker ran out of budget, which leaves
    the comparison inconclusive.
    """
    try:
        from_search = solve_backtracking(adjacency, budget=budget)
    except SearchBudgetExceededError:
        return None
    from_matching = solve_matching(adjacency)
    return all(
        is_consistent(rot) and adjacency_from_rotation(rot) == adjacency
        for rot in (from_search, from_matching)
    )
