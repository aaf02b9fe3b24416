"""Shared instance builders for the test suite."""

import numpy as np
import pytest

from hgspec import Hypergraph


def cycle_graph(n):
    """Graph cycle C_n as a 2-uniform hypergraph (2-regular)."""
    return Hypergraph(n, 2, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Hypergraph(n, 2, [(i, i + 1) for i in range(n - 1)])


def loose_path(edges):
    """t=3 loose path with the given number of edges: {0,1,2},{2,3,4},..."""
    n = 2 * edges + 1
    return Hypergraph(n, 3, [(2 * i, 2 * i + 1, 2 * i + 2) for i in range(edges)])


def loose_cycle3():
    """The 3-edge loose cycle {0,1,2},{2,3,4},{4,5,0}."""
    return Hypergraph(6, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 0)])


def tight_cycle3(n):
    """Tight 3-uniform cycle: edges {i, i+1, i+2} mod n; 3-regular."""
    return Hypergraph(n, 3, [(i, (i + 1) % n, (i + 2) % n) for i in range(n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + ((i + 2) % 5)) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Hypergraph(10, 2, outer + inner + spokes)


def random_connected_graph(n, p, seed):
    """Seeded G(n, p), resampled until connected."""
    rng = np.random.default_rng(seed)
    while True:
        mask = np.triu(rng.random((n, n)) < p, 1)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if mask[i, j]]
        if not edges:
            continue
        h = Hypergraph(n, 2, edges)
        if h.is_connected:
            return h


def adjacency_matrix(h):
    """Dense symmetric adjacency matrix of a 2-uniform hypergraph."""
    assert h.t == 2
    a = np.zeros((h.n, h.n))
    for (i, j) in h.edges:
        a[i, j] = a[j, i] = 1.0
    return a


@pytest.fixture(scope="session")
def small_ball_335():
    from hgspec import hypertree_ball
    return hypertree_ball(3, 3, 5)
