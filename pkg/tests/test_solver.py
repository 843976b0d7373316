"""Labeling solvers: the exhaustive backtracker and the matching constructor."""

import pytest

from conftest import CORPUS, random_regular_adjacency
from rotmaps import (
    AdjacencyMatrix,
    ArcLabeling,
    MalformedInputError,
    RegularityError,
    SearchBudgetExceededError,
    adjacency_from_rotation,
    agree,
    complete,
    cycle,
    generalized_petersen,
    is_consistent,
    solve_backtracking,
    solve_matching,
)

K3_ADJ = AdjacencyMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
K2_ADJ = AdjacencyMatrix([[0, 1], [1, 0]])


def petersen_adjacency():
    return adjacency_from_rotation(generalized_petersen(5, 2))


class TestArcLabeling:
    def test_assign_and_complete(self):
        lab = ArcLabeling(K2_ADJ)
        lab.assign(1, 2, 1)
        lab.assign(2, 1, 1)
        assert lab.is_complete
        assert lab.to_rotation_matrix().entries.tolist() == [[2], [1]]

    def test_out_distinct_enforced(self):
        lab = ArcLabeling(K3_ADJ)
        lab.assign(1, 2, 1)
        assert not lab.can_assign(1, 3, 1)
        with pytest.raises(MalformedInputError):
            lab.assign(1, 3, 1)

    def test_in_distinct_enforced(self):
        lab = ArcLabeling(K3_ADJ)
        lab.assign(2, 1, 1)
        assert not lab.can_assign(3, 1, 1)
        assert lab.can_assign(3, 1, 2)

    def test_non_arcs_rejected(self):
        lab = ArcLabeling(K3_ADJ)
        assert not lab.can_assign(1, 1, 1)
        ring = adjacency_from_rotation(cycle(4))
        assert not ArcLabeling(ring).can_assign(1, 3, 1)

    def test_unassign_restores(self):
        lab = ArcLabeling(K3_ADJ)
        lab.assign(1, 2, 1)
        lab.unassign(1, 2)
        assert lab.label_of(1, 2) is None
        assert lab.can_assign(1, 2, 1)
        with pytest.raises(MalformedInputError):
            lab.unassign(1, 2)

    def test_incomplete_cannot_export(self):
        lab = ArcLabeling(K3_ADJ)
        lab.assign(1, 2, 1)
        with pytest.raises(MalformedInputError):
            lab.to_rotation_matrix()


class TestBacktracking:
    def test_k3_finds_the_cyclic_map(self):
        # deterministic under lexicographic arc order and ascending labels
        rot = solve_backtracking(K3_ADJ)
        assert rot.entries.tolist() == [[2, 3], [3, 1], [1, 2]]
        assert is_consistent(rot)

    def test_k2(self):
        assert solve_backtracking(K2_ADJ).entries.tolist() == [[2], [1]]

    def test_petersen(self):
        adj = petersen_adjacency()
        rot = solve_backtracking(adj)
        assert is_consistent(rot)
        assert adjacency_from_rotation(rot) == adj

    def test_deterministic(self):
        adj = petersen_adjacency()
        assert solve_backtracking(adj) == solve_backtracking(adj)

    def test_budget_exhaustion(self):
        with pytest.raises(SearchBudgetExceededError) as info:
            solve_backtracking(petersen_adjacency(), budget=3)
        assert info.value.nodes_explored == 4

    def test_edgeless_rejected(self):
        import numpy as np

        with pytest.raises(RegularityError):
            solve_backtracking(AdjacencyMatrix(np.zeros((3, 3), dtype=np.int64)))


class TestMatching:
    def test_k4(self):
        adj = adjacency_from_rotation(complete(4))
        rot = solve_matching(adj)
        assert rot.num_vertices == 4 and rot.degree == 3
        assert is_consistent(rot)
        assert adjacency_from_rotation(rot) == adj

    def test_c5(self):
        adj = adjacency_from_rotation(cycle(5))
        rot = solve_matching(adj)
        assert is_consistent(rot)
        assert adjacency_from_rotation(rot) == adj

    def test_seeded_random_cubic(self):
        adj = random_regular_adjacency(16, 3, seed=1601)
        rot = solve_matching(adj)
        assert is_consistent(rot)
        assert adjacency_from_rotation(rot) == adj

    def test_deterministic(self):
        adj = random_regular_adjacency(16, 3, seed=1601)
        assert solve_matching(adj) == solve_matching(adj)

    @pytest.mark.parametrize("name,rot", CORPUS[::5], ids=[n for n, _ in CORPUS[::5]])
    def test_family_sample(self, name, rot):
        adj = adjacency_from_rotation(rot)
        out = solve_matching(adj)
        assert is_consistent(out)
        assert adjacency_from_rotation(out) == adj


class TestAgree:
    @pytest.mark.parametrize("adj_factory", [
        lambda: K3_ADJ,
        lambda: K2_ADJ,
        petersen_adjacency,
    ])
    def test_agree(self, adj_factory):
        assert agree(adj_factory()) is True

    def test_inconclusive_on_tiny_budget(self):
        assert agree(petersen_adjacency(), budget=3) is None
