"""Generators for the graph families studied by this package.

Node numbering conventions (all 0-based ids):

* path: nodes in path order, edges ``(i, i+1)``.
* cycle: path order plus the closing edge ``(n-1, 0)``.
* grid: ``n x n`` cells in row-major order; cell coordinates are 1-indexed
  ``(row, col)`` with ``id = (row-1)*n + (col-1)``.
* complete caterpillar: spine ``0..d-1`` in path order, then one pendant per
  non-leaf spine node, appended in spine order (pendant of spine ``j`` is
  ``d + j - 1`` for ``j`` in ``1..d-2``).
* spider: head ``0``; leg ``j`` occupies ids ``1 + j*r .. 1 + j*r + r - 1``
  ordered from the head outward.
"""

from __future__ import annotations

from typing import NamedTuple

from .graphs import Graph, GraphError, build_graph


class GridCoord(NamedTuple):
    """1-indexed grid cell, matching the usual matrix convention."""

    row: int
    col: int


def grid_node(coord: GridCoord | tuple[int, int], n: int) -> int:
    """Map a 1-indexed grid coordinate to its node id in ``gen_grid(n)``."""
    row, col = coord
    if not (1 <= row <= n and 1 <= col <= n):
        raise GraphError(f"coordinate {(row, col)} outside 1..{n}")
    return (row - 1) * n + (col - 1)


def grid_coord(v: int, n: int) -> GridCoord:
    """Inverse of :func:`grid_node`."""
    if not (0 <= v < n * n):
        raise GraphError(f"node {v} outside 0..{n * n - 1}")
    return GridCoord(v // n + 1, v % n + 1)


def simplicial_key(coord: GridCoord | tuple[int, int]) -> tuple[int, int]:
    """Sort key for the simplicial order: by coordinate sum, ties by row."""
    row, col = coord
    return (row + col, row)


def simplicial_cmp(u: GridCoord | tuple[int, int], v: GridCoord | tuple[int, int]) -> int:
    """Three-way comparison for the simplicial order (negative when u < v)."""
    ku, kv = simplicial_key(u), simplicial_key(v)
    return (ku > kv) - (ku < kv)


def simplicial_order(n: int) -> list[int]:
    """All node ids of the n x n grid, smallest first in the simplicial order."""
    out = []
    for s in range(2, 2 * n + 1):  # anti-diagonals by coordinate sum, then row
        for row in range(max(1, s - n), min(n, s - 1) + 1):
            out.append((row - 1) * n + (s - row - 1))
    return out


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((n - 1, 0))
    return build_graph(n, edges)


def gen_grid(n: int) -> Graph:
    """The n x n Cartesian grid with 4-neighbor adjacency."""
    if n < 1:
        raise GraphError(f"grid needs n >= 1, got {n}")
    adj = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            nbrs = []  # already in sorted order: up, left, right, down
            if r > 0:
                nbrs.append(v - n)
            if c > 0:
                nbrs.append(v - 1)
            if c + 1 < n:
                nbrs.append(v + 1)
            if r + 1 < n:
                nbrs.append(v + n)
            adj.append(tuple(nbrs))
    return Graph(n * n, tuple(adj))


def gen_complete_caterpillar(d: int) -> Graph:
    """Path of ``d`` spine nodes with one pendant on every non-leaf spine node.

    Has ``2d - 2`` nodes in total.
    """
    if d < 3:
        raise GraphError(f"complete caterpillar needs d >= 3, got {d}")
    edges = [(i, i + 1) for i in range(d - 1)]
    for j in range(1, d - 1):
        edges.append((j, d + j - 1))
    return build_graph(2 * d - 2, edges)


def gen_spider(legs: int, r: int) -> Graph:
    """Spider with ``legs`` legs of ``r`` nodes each hanging off head node 0."""
    if legs < 1:
        raise GraphError(f"spider needs legs >= 1, got {legs}")
    if r < 1:
        raise GraphError(f"spider needs leg length r >= 1, got {r}")
    edges = []
    for j in range(legs):
        first = 1 + j * r
        edges.append((0, first))
        for k in range(r - 1):
            edges.append((first + k, first + k + 1))
    return build_graph(1 + legs * r, edges)


def spider_leg_nodes(legs: int, r: int) -> list[list[int]]:
    """Node ids of each leg of ``gen_spider(legs, r)``, ordered head-outward."""
    return [[1 + j * r + k for k in range(r)] for j in range(legs)]
