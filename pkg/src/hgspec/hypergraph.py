"""Uniform hypergraphs: representation, structural predicates, metrics.

Vertices are dense integer ids ``0..n-1``.  Edges are sorted tuples of
``t`` distinct vertices, deduplicated and stored in lexicographic order,
so two hypergraphs with the same edge set compare equal edge-list-wise.
A :class:`Hypergraph` is immutable after construction; all operations in
this module are pure functions of their inputs.

Distances are measured in edges: ``dist(u, v)`` is the minimum number of
edges in a walk whose first edge contains ``u`` and whose last contains
``v``.  Two distinct vertices sharing an edge are at distance 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError

#: marker used in distance arrays for vertices no walk reaches
UNREACHABLE = -1


class Hypergraph:
    """A finite t-uniform hypergraph.

    Parameters
    ----------
    n : int
        Number of vertices; ids run from 0 to n-1.
    t : int
        Edge cardinality, at least 2.
    edges : iterable of iterables of int
        Each edge must contain exactly t distinct vertex ids in range.
        Duplicate edges are a hard error (hypergraphs are simple).
    """

    __slots__ = ("n", "t", "edges", "incidence", "_edge_array", "_degrees",
                 "_connected")

    def __init__(self, n, t, edges):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n}")
        if not isinstance(t, int) or t < 2:
            raise ValueError(f"uniformity t must be an integer >= 2, got {t}")
        canonical = []
        seen = set()
        for raw in edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != t:
                raise ValueError(f"edge {raw!r} does not have {t} vertices")
            if len(set(edge)) != t:
                raise ValueError(f"edge {raw!r} has repeated vertices")
            if edge[0] < 0 or edge[-1] >= n:
                raise ValueError(f"edge {raw!r} has a vertex outside [0, {n})")
            if edge in seen:
                raise ValueError(f"duplicate edge {edge!r}")
            seen.add(edge)
            canonical.append(edge)
        canonical.sort()
        self.n = n
        self.t = t
        self.edges = tuple(canonical)
        incidence = [[] for _ in range(n)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                incidence[v].append(idx)
        self.incidence = tuple(tuple(lst) for lst in incidence)
        self._edge_array = None
        self._degrees = None
        self._connected = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, t) int64 array (empty (0, t) when m = 0)."""
        if self._edge_array is None:
            if self.edges:
                arr = np.asarray(self.edges, dtype=np.int64)
            else:
                arr = np.empty((0, self.t), dtype=np.int64)
            arr.setflags(write=False)
            self._edge_array = arr
        return self._edge_array

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            deg = np.zeros(self.n, dtype=np.int64)
            for v, inc in enumerate(self.incidence):
                deg[v] = len(inc)
            deg.setflags(write=False)
            self._degrees = deg
        return self._degrees

    @property
    def is_connected(self) -> bool:
        """Every pair of vertices is joined by a walk (cached)."""
        if self._connected is None:
            dm = distances_from(self, 0)
            self._connected = bool(np.all(dm.dist != UNREACHABLE))
        return self._connected

    def __repr__(self):
        return f"Hypergraph(n={self.n}, t={self.t}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.t, self.edges) == (other.n, other.t, other.edges)

    def __hash__(self):
        return hash((self.n, self.t, self.edges))


def degree_sequence(h: Hypergraph) -> list[int]:
    """Per-vertex edge counts; h is k-regular iff all entries equal k."""
    return [int(d) for d in h.degrees]


def regular_degree(h: Hypergraph) -> int | None:
    """The common degree k when h is regular, else None."""
    deg = h.degrees
    if h.n == 0:
        return None
    k = int(deg[0])
    return k if bool(np.all(deg == k)) else None


def is_linear(h: Hypergraph) -> bool:
    """True iff every pair of distinct edges shares at most one vertex."""
    seen_pairs = set()
    for edge in h.edges:
        for i in range(h.t):
            for j in range(i + 1, h.t):
                pair = (edge[i], edge[j])
                if pair in seen_pairs:
                    return False
                seen_pairs.add(pair)
    return True


def is_acyclic(h: Hypergraph) -> bool:
    """True iff the bipartite Levi (incidence) graph contains no cycle.

    Uses the forest identity: with n + m Levi nodes and t*m incidence
    links, acyclic is equivalent to t*m = n + m - (#components).
    Acyclic implies linear.
    """
    parent = list(range(h.n + h.m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for idx, edge in enumerate(h.edges):
        enode = h.n + idx
        for v in edge:
            ra, rb = find(v), find(enode)
            if ra != rb:
                parent[ra] = rb
    components = sum(1 for a in range(h.n + h.m) if find(a) == a)
    return h.t * h.m == h.n + h.m - components


@dataclass(frozen=True)
class DistanceMap:
    """BFS distances (in edges) from a source vertex.

    ``dist[v]`` is the hypergraph distance or ``UNREACHABLE``.
    """

    source: int
    dist: np.ndarray

    @property
    def complete(self) -> bool:
        return bool(np.all(self.dist != UNREACHABLE))

    @property
    def eccentricity(self) -> int:
        """Largest finite distance from the source."""
        return int(self.dist.max(initial=0))

    def layer(self, i: int) -> np.ndarray:
        """Vertex ids at distance exactly i (the sphere S_i)."""
        return np.flatnonzero(self.dist == i)

    def ball(self, r: int) -> np.ndarray:
        """Vertex ids at distance at most r (the ball B_r)."""
        return np.flatnonzero((self.dist >= 0) & (self.dist <= r))

    def layer_sizes(self, r_max: int) -> list[int]:
        """[|S_0|, ..., |S_r_max|]."""
        return [int(np.count_nonzero(self.dist == i)) for i in range(r_max + 1)]


def distances_from(h: Hypergraph, o: int) -> DistanceMap:
    """Breadth-first distances from vertex o over the co-edge relation.

    Layer-synchronous BFS; within each layer vertices are expanded in
    increasing id order so that derived structures are deterministic.
    """
    if not 0 <= o < h.n:
        raise ValueError(f"source vertex {o} outside [0, {h.n})")
    dist = np.full(h.n, UNREACHABLE, dtype=np.int64)
    dist[o] = 0
    edge_done = [False] * h.m
    frontier = [o]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for v in frontier:
            for e in h.incidence[v]:
                if edge_done[e]:
                    continue
                edge_done[e] = True
                for u in h.edges[e]:
                    if dist[u] == UNREACHABLE:
                        dist[u] = level
                        nxt.append(u)
        nxt.sort()
        frontier = nxt
    dist.setflags(write=False)
    return DistanceMap(source=o, dist=dist)


def _lex_shortest_path(h: Hypergraph, source: int, target: int,
                       dist_to_target: np.ndarray) -> list[int]:
    """Lexicographically smallest shortest vertex path source -> target.

    Greedy: from the current vertex, step to the lowest-id co-edge
    neighbour whose distance to the target drops by one.
    """
    path = [source]
    current = source
    remaining = int(dist_to_target[source])
    while remaining > 0:
        best = None
        for e in h.incidence[current]:
            for u in h.edges[e]:
                if dist_to_target[u] == remaining - 1:
                    if best is None or u < best:
                        best = u
        path.append(best)
        current = best
        remaining -= 1
    return path


def diameter_and_path(h: Hypergraph) -> tuple[int, list[int]]:
    """Exact diameter and a shortest vertex path realizing it.

    All-sources BFS in general; acyclic hypergraphs use the double-BFS
    endpoint argument, which is exact on forests (every Levi leaf is a
    vertex node since edge nodes have degree t >= 2).

    Raises
    ------
    DisconnectedError
        If some vertex pair is unreachable.
    """
    if h.n == 1:
        return 0, [0]
    if not h.is_connected:
        raise DisconnectedError("diameter undefined: hypergraph is disconnected")
    if is_acyclic(h):
        d0 = distances_from(h, 0)
        u = int(np.argmax(d0.dist))
        du = distances_from(h, u)
        v = int(np.argmax(du.dist))
        best = (int(du.dist[v]), u, v)
    else:
        best = (-1, 0, 0)
        for s in range(h.n):
            ds = distances_from(h, s)
            if not ds.complete:
                raise DisconnectedError(
                    "diameter undefined: hypergraph is disconnected"
                )
            far = int(np.argmax(ds.dist))
            d = int(ds.dist[far])
            if d > best[0]:
                best = (d, s, far)
    diam, s, v = best
    dist_to_target = distances_from(h, v).dist
    path = _lex_shortest_path(h, s, v, dist_to_target)
    return diam, path


def min_eccentricity_vertex(h: Hypergraph) -> int:
    """Lowest-id vertex of minimum eccentricity (a center of h)."""
    if not h.is_connected:
        raise DisconnectedError("eccentricity undefined: disconnected")
    best_v, best_ecc = 0, None
    for v in range(h.n):
        ecc = distances_from(h, v).eccentricity
        if best_ecc is None or ecc < best_ecc:
            best_v, best_ecc = v, ecc
    return best_v
