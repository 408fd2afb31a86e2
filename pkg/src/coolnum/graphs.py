"""Immutable simple undirected graphs and small-graph distance metrics.

Nodes are dense 0-based integer ids. All processes, solvers, and bounds in
this package operate on the :class:`Graph` defined here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

UNREACHABLE = -1


class GraphError(ValueError):
    """Malformed graph input: bad endpoint, self-loop, or bad parameter."""


class DisconnectedGraphError(GraphError):
    """An operation that requires a connected graph got a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Undirected graph on nodes ``0..n-1``.

    Adjacency is stored per node as a sorted tuple of neighbor ids. Instances
    are immutable after construction and safe to share across threads and
    processes.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-node neighborhood bitmasks; meant for graphs small enough to search."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return bfs_distances(self, 0).count(UNREACHABLE) == 0

    def __repr__(self) -> str:  # keep pytest output short
        return f"Graph(n={self.n}, m={self.num_edges})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph from an edge list.

    Endpoints must lie in ``0..n-1`` and differ; duplicate edges (in either
    orientation) collapse to a single edge. Connectivity is not required.
    """
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at node {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Hop distances from ``v``; unreachable nodes get ``UNREACHABLE`` (-1)."""
    if not (0 <= v < g.n):
        raise GraphError(f"start node {v} outside 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def eccentricity(g: Graph, v: int) -> int:
    """Greatest distance from ``v`` to any node. Requires a connected graph."""
    dist = bfs_distances(g, v)
    if UNREACHABLE in dist:
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    return max(dist)


def diameter(g: Graph) -> int:
    """Largest shortest-path distance over all node pairs.

    Raises :class:`DisconnectedGraphError` on disconnected input.
    """
    if g.n == 0 or not g.is_connected:
        raise DisconnectedGraphError("diameter is undefined on a disconnected graph")
    return max(eccentricity(g, v) for v in range(g.n))
