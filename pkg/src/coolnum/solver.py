"""Exact solvers for the cooling number, maximum sequence length, and burning number.

The cooling-side solvers run a depth-first search over cooled-set states at
round boundaries, memoized on the cooled set alone: the future of the process
depends only on which nodes are cooled, never on how many rounds it took to
get there. Pruning is restricted to bounds that cannot cut an optimal branch,
so memoized values stay exact:

* from a boundary state with ``u`` uncooled nodes at most ``ceil((u+1)/2)``
  rounds remain (every non-final round cools a spread node plus a source);
* at most ``ecc(C)`` rounds remain from cooled set ``C``, since spread alone
  reaches every node within ``ecc(C)`` rounds and sources only accelerate
  (the state-local form of the diameter+1 bound).

Both bounds are cross-checked against unpruned search in the test suite.

The burning solver iteratively deepens over the round count ``k``: the graph
burns within ``k`` rounds exactly when balls of radii ``k-1, k-2, ..., 0``
around some choice of centers cover every node, and any such cover replays
into a valid run of exactly ``k`` rounds.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from multiprocessing import get_context

from .engine import CoolingTrace, run_burning, validate_sequence
from .graphs import DisconnectedGraphError, Graph, GraphError, bfs_distances, diameter

DEFAULT_COOLING_MAX_NODES = 20
DEFAULT_BURNING_MAX_NODES = 24


class GraphTooLargeError(ValueError):
    """Input exceeds the solver's node cap; raise the cap explicitly to proceed."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} nodes, solver cap is {cap}")


class TimeBudgetExceededError(RuntimeError):
    """The optional wall-clock budget ran out mid-search."""


@dataclass(frozen=True)
class SearchLimits:
    """Caps the solver refuses to exceed rather than run unbounded.

    ``max_nodes=None`` selects the per-solver default (20 for cooling-side
    searches, 24 for burning).
    """

    max_nodes: int | None = None
    time_budget: float | None = None


@dataclass(frozen=True)
class SearchStats:
    expanded: int
    memo_hits: int
    wall_time: float


@dataclass(frozen=True)
class SearchResult:
    """Optimal value, a witness trace achieving it, and search statistics."""

    value: int
    witness: CoolingTrace
    stats: SearchStats


_ROUNDS = 0
_SOURCES = 1


class _MaxSearch:
    """Shared DFS core for maximizing rounds or source count."""

    def __init__(self, g: Graph, objective: int, prune: bool, use_memo: bool,
                 deadline: float | None):
        self.adj = g.adj
        self.masks = g.neighbor_masks
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.objective = objective
        self.prune = prune
        self.use_memo = use_memo
        self.deadline = deadline
        # value and lowest-id optimal source per boundary state; always
        # written so witnesses reconstruct even with lookups disabled
        self.memo: dict[int, tuple[int, int | None]] = {}
        self.expanded = 0
        self.memo_hits = 0

    def _spread(self, mask: int) -> int:
        acc = mask
        m = mask
        masks = self.masks
        while m:
            low = m & -m
            acc |= masks[low.bit_length() - 1]
            m ^= low
        return acc

    def _ecc(self, mask: int) -> int:
        """Greatest hop distance from the set ``mask``; graph is connected."""
        seen = mask
        frontier = [i for i in range(self.n) if mask >> i & 1]
        d = 0
        while True:
            nxt = []
            for v in frontier:
                for w in self.adj[v]:
                    if not seen >> w & 1:
                        seen |= 1 << w
                        nxt.append(w)
            if not nxt:
                return d
            d += 1
            frontier = nxt

    def best_from(self, boundary: int) -> int:
        """Objective value achievable from a cooled set at a round boundary."""
        if boundary == self.full:
            return 0  # the round that cooled the last node already ended the run
        if self.use_memo:
            hit = self.memo.get(boundary)
            if hit is not None:
                self.memo_hits += 1
                return hit[0]
        self.expanded += 1
        if self.deadline is not None and self.expanded % 64 == 0:
            if time.monotonic() > self.deadline:
                raise TimeBudgetExceededError("search exceeded its time budget")
        after = self._spread(boundary)
        if after == self.full:
            # the next round's spread finishes the process: one final round,
            # no further source
            value, choice = (1, None) if self.objective == _ROUNDS else (0, None)
            self.memo[boundary] = (value, choice)
            return value
        u = (self.full ^ after).bit_count()
        child_cap = self.n  # inert unless pruning
        if self.prune:
            counting = (u + 1) // 2 if self.objective == _ROUNDS else (u - 1) // 2
            child_cap = min(counting, self._ecc(after))
        value = 0
        choice: int | None = None
        rem = self.full ^ after
        while rem:
            low = rem & -rem
            rem ^= low
            v = 1 + self.best_from(after | low)
            if v > value:
                value, choice = v, low.bit_length() - 1
                if self.prune and value >= 1 + child_cap:
                    break  # no sibling can strictly beat the bound
        self.memo[boundary] = (value, choice)
        return value

    def reconstruct(self, root: int) -> list[int]:
        """Lowest-id optimal source list starting from first source ``root``."""
        seq = [root]
        state = 1 << root
        while state != self.full:
            _, choice = self.memo[state]
            if choice is None:
                return seq
            seq.append(choice)
            state = self._spread(state) | (1 << choice)
        return seq


def _solve_roots(g: Graph, objective: int, roots: list[int], prune: bool,
                 use_memo: bool, deadline: float | None, global_cap: int,
                 ) -> tuple[int, int, list[int], int, int]:
    """Search the given first-source choices; ties go to the lowest root."""
    search = _MaxSearch(g, objective, prune, use_memo, deadline)
    n = g.n
    best, best_root = 0, -1
    for s in roots:
        if prune and best_root >= 0:
            counting = (n + 1) // 2 if objective == _ROUNDS else (n - 1) // 2
            if best >= 1 + min(counting, search._ecc(1 << s)):
                continue  # this root cannot strictly beat the incumbent
        v = 1 + search.best_from(1 << s)
        if v > best:
            best, best_root = v, s
            if prune and best >= global_cap:
                break
    return best, best_root, search.reconstruct(best_root), search.expanded, search.memo_hits


def _worker(args) -> tuple[int, int, list[int], int, int]:
    return _solve_roots(*args)


def _prepare(g: Graph, limits: SearchLimits | None, default_cap: int) -> SearchLimits:
    limits = limits or SearchLimits()
    cap = limits.max_nodes if limits.max_nodes is not None else default_cap
    if g.n > cap:
        raise GraphTooLargeError(g.n, cap)
    if g.n < 1:
        raise GraphError("solver needs at least one node")
    if not g.is_connected:
        raise DisconnectedGraphError("solver requires a connected graph")
    return SearchLimits(cap, limits.time_budget)


def _max_solve(g: Graph, limits: SearchLimits | None, objective: int, prune: bool,
               use_memo: bool, first_sources: list[int] | None, jobs: int) -> SearchResult:
    limits = _prepare(g, limits, DEFAULT_COOLING_MAX_NODES)
    start = time.monotonic()
    deadline = start + limits.time_budget if limits.time_budget is not None else None

    if g.n == 1:
        trace = validate_sequence(g, [0])
        return SearchResult(1, trace, SearchStats(0, 0, time.monotonic() - start))

    if first_sources is None:
        roots = list(range(g.n))
    else:
        roots = sorted(set(first_sources))
        if not roots or roots[0] < 0 or roots[-1] >= g.n:
            raise GraphError(f"first_sources must be node ids in 0..{g.n - 1}")

    if objective == _ROUNDS:
        global_cap = min(diameter(g) + 1, (g.n + 2) // 2)
    else:
        global_cap = (g.n + 1) // 2

    if jobs > 1 and len(roots) > 1:
        jobs = min(jobs, len(roots))
        chunks = [roots[i::jobs] for i in range(jobs)]
        args = [(g, objective, chunk, prune, use_memo, deadline, global_cap)
                for chunk in chunks]
        ctx = get_context()
        with ctx.Pool(jobs) as pool:
            outcomes = pool.map(_worker, args)
        value, root, seq = -1, -1, []
        expanded = hits = 0
        for v, r, s, e, h in outcomes:
            expanded += e
            hits += h
            if v > value or (v == value and r < root):
                value, root, seq = v, r, s
    else:
        value, root, seq, expanded, hits = _solve_roots(
            g, objective, roots, prune, use_memo, deadline, global_cap)

    trace = validate_sequence(g, seq)
    achieved = trace.num_rounds if objective == _ROUNDS else len(trace.sources)
    if achieved != value:
        raise AssertionError(f"witness replay gave {achieved}, search said {value}")
    return SearchResult(value, trace, SearchStats(expanded, hits, time.monotonic() - start))


def cooling_number(g: Graph, limits: SearchLimits | None = None, *, prune: bool = True,
                   use_memo: bool = True, first_sources: list[int] | None = None,
                   jobs: int = 1) -> SearchResult:
    """Exact cooling number: the maximum round count over all source choices.

    ``first_sources`` restricts the first-round branching; callers must ensure
    the restriction covers every symmetry orbit (e.g. ``[0]`` on a cycle).
    ``jobs > 1`` solves first-source branches in parallel processes with
    per-worker memo tables; results are identical regardless of schedule.
    """
    return _max_solve(g, limits, _ROUNDS, prune, use_memo, first_sources, jobs)


def max_sequence_length(g: Graph, limits: SearchLimits | None = None, *, prune: bool = True,
                        use_memo: bool = True, first_sources: list[int] | None = None,
                        jobs: int = 1) -> SearchResult:
    """Exact maximum number of sources selectable in one run (same search,
    objective = source count). The round count of a run always lies within
    {sources, sources+1}."""
    return _max_solve(g, limits, _SOURCES, prune, use_memo, first_sources, jobs)


class _BurnReplayPolicy:
    """Plays planned centers in order, substituting the smallest unburned id
    whenever a planned center is already burned (its ball is covered anyway)."""

    def __init__(self, planned: list[int]):
        self.planned = planned
        self.idx = 0

    def __call__(self, g: Graph, burned, t: int) -> int:
        self.idx += 1
        if self.idx <= len(self.planned):
            c = self.planned[self.idx - 1]
            if c not in burned:
                return c
        return min(v for v in range(g.n) if v not in burned)


def burning_number(g: Graph, limits: SearchLimits | None = None) -> SearchResult:
    """Exact burning number: the minimum round count over all source choices.

    Deepens over the target round count ``k``, testing ball-cover feasibility
    with radii ``k-1..0`` by DFS over (uncovered set, unused radii) states,
    then replays the first cover found through the engine.
    """
    limits = _prepare(g, limits, DEFAULT_BURNING_MAX_NODES)
    start = time.monotonic()
    deadline = start + limits.time_budget if limits.time_budget is not None else None
    n = g.n
    full = (1 << n) - 1
    dist = [bfs_distances(g, v) for v in range(n)]
    expanded = 0
    cache_hits = 0

    for k in range(1, n + 1):
        # ball_masks[c][r] for r <= k-1
        ball_masks = []
        for c in range(n):
            row = []
            acc = 0
            by_d: list[list[int]] = [[] for _ in range(k)]
            for w in range(n):
                if dist[c][w] < k:
                    by_d[dist[c][w]].append(w)
            for r in range(k):
                for w in by_d[r]:
                    acc |= 1 << w
                row.append(acc)
            ball_masks.append(row)

        failed: set[tuple[int, tuple[int, ...]]] = set()

        def cover(covered: int, radii: tuple[int, ...]) -> list[tuple[int, int]] | None:
            nonlocal expanded, cache_hits
            if covered == full:
                return []
            if not radii:
                return None
            key = (covered, radii)
            if key in failed:
                cache_hits += 1
                return None
            expanded += 1
            if deadline is not None and expanded % 1024 == 0:
                if time.monotonic() > deadline:
                    raise TimeBudgetExceededError("search exceeded its time budget")
            # lowest uncovered node; some remaining ball must cover it, so
            # branching over (radius, center) pairs reaching it is complete
            rem = full ^ covered
            u = (rem & -rem).bit_length() - 1
            for i, r in enumerate(radii):
                rest = radii[:i] + radii[i + 1 :]
                for c in range(n):
                    if dist[c][u] <= r:
                        sub = cover(covered | ball_masks[c][r], rest)
                        if sub is not None:
                            return [(r, c)] + sub
            failed.add(key)
            return None

        assignment = cover(0, tuple(range(k - 1, -1, -1)))
        if assignment is None:
            continue
        planned = [c for _, c in sorted(assignment, key=lambda rc: -rc[0])]
        trace = run_burning(g, _BurnReplayPolicy(planned))
        if trace.num_rounds != k:
            raise AssertionError(f"cover replay gave {trace.num_rounds} rounds, expected {k}")
        return SearchResult(k, trace, SearchStats(expanded, cache_hits, time.monotonic() - start))
    raise AssertionError("unreachable: every connected graph burns within n rounds")


def default_cooling_cap() -> int:
    """Solver node cap, honoring the COOLNUM_MAX_NODES override."""
    return int(os.environ.get("COOLNUM_MAX_NODES", DEFAULT_COOLING_MAX_NODES))


def default_burning_cap() -> int:
    return int(os.environ.get("COOLNUM_MAX_NODES", DEFAULT_BURNING_MAX_NODES))
