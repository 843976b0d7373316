"""Shared test fixtures: the family corpus and seeded random regular graphs."""

import random

import numpy as np
import pytest

from rotmaps import (
    AdjacencyMatrix,
    complete,
    complete_bipartite,
    cycle,
    generalized_petersen,
    hypercube,
)


def corpus_members():
    """Every family instance the suites sweep over: 40 named rotation maps."""
    members = []
    for n in range(3, 13):
        members.append((f"cycle-{n}", cycle(n)))
    for n in range(3, 9):
        members.append((f"complete-{n}", complete(n)))
    for n in range(2, 7):
        members.append((f"bipartite-{n}", complete_bipartite(n)))
    for n in range(3, 10):
        for s in range(1, (n - 1) // 2 + 1):
            members.append((f"gp-{n}-{s}", generalized_petersen(n, s)))
    for m in range(1, 4):
        members.append((f"hypercube-{m}", hypercube(m)))
    return members


CORPUS = corpus_members()
CORPUS_IDS = [name for name, _ in CORPUS]


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def random_regular_adjacency(n, d, seed):
    """Pairing model with rejection: reshuffle stubs until the pairing is a simple graph."""
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    if not 1 <= d < n:
        raise ValueError("need 1 <= d < n")
    rng = random.Random(seed)
    stubs = [v for v in range(1, n + 1) for _ in range(d)]
    for _ in range(100_000):
        rng.shuffle(stubs)
        mat = np.zeros((n, n), dtype=np.int64)
        simple = True
        for a, b in zip(stubs[::2], stubs[1::2]):
            if a == b or mat[a - 1, b - 1]:
                simple = False
                break
            mat[a - 1, b - 1] = mat[b - 1, a - 1] = 1
        if simple:
            return AdjacencyMatrix(mat)
    raise RuntimeError(f"no simple pairing found for n={n}, d={d}, seed={seed}")


def is_connected(adj):
    """Breadth-first reachability from vertex 1."""
    n = adj.order
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj.neighbors(v):
                w = int(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == n
