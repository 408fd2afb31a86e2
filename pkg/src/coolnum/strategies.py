"""Constructive cooling strategies and the closed-form values they certify.

Each strategy either emits an explicit source sequence (playable through
``validate_sequence``, which auto-extends once the scripted part is done) or
a policy driven directly by ``run_cooling``. Round counts of these runs are
lower bounds on the cooling number by definition; for grids and complete
caterpillars they are exactly optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Mapping

from .engine import CoolingTrace, run_cooling, validate_sequence
from .generators import (
    gen_complete_caterpillar,
    gen_grid,
    gen_path,
    gen_spider,
    simplicial_order,
    spider_leg_nodes,
)
from .graphs import Graph, GraphError, bfs_distances, diameter
from .ilt import IltGraph, ilt_t


class StrategyError(ValueError):
    """A strategy was asked to run outside its hypotheses."""


def _ceil_log2(m: int) -> int:
    """ceil(log2(m)) for m >= 1."""
    return (m - 1).bit_length()


@dataclass(frozen=True)
class ClosedForm:
    """A certified value for one family: exact, lower bound, or window [lo, hi]."""

    family: str
    params: dict[str, int]
    kind: str  # "exact" | "lower_bound" | "window"
    lo: int
    hi: int | None

    def __post_init__(self):
        if self.kind == "window" and (self.hi is None or self.hi < self.lo):
            raise StrategyError(f"empty window [{self.lo}, {self.hi}]")
        if self.kind == "exact" and self.hi != self.lo:
            raise StrategyError("exact form needs lo == hi")

    def contains(self, value: int) -> bool:
        if self.kind == "lower_bound":
            return value >= self.lo
        assert self.hi is not None
        return self.lo <= value <= self.hi

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "kind": self.kind,
            "lo": self.lo,
            "hi": self.hi,
        }


def closed_form(family: str, params: Mapping[str, int]) -> ClosedForm:
    """Certified cooling-number value or window for a named family."""
    p = dict(params)
    if family == "path":
        n = p["n"]
        if n < 1:
            raise GraphError("path needs n >= 1")
        v = (n + 2) // 2
        return ClosedForm("path", p, "exact", v, v)
    if family == "cycle":
        n = p["n"]
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        v = (n + 4) // 3
        return ClosedForm("cycle", p, "exact", v, v)
    if family == "caterpillar":
        d = p["d"]
        if d < 3:
            raise GraphError("complete caterpillar needs d >= 3")
        return ClosedForm("caterpillar", p, "exact", d, d)
    if family == "spider":
        m, r = p["m"], p["r"]
        if m < 1 or r < 1:
            raise GraphError("spider forms need m >= 1 and r >= 1")
        if m < _ceil_log2(r + 1):
            lo = 2 * sum((r + 1) // 2**i for i in range(1, m + 1))
            return ClosedForm("spider", p, "lower_bound", lo, None)
        v = 2 * r + 1
        return ClosedForm("spider", p, "exact", v, v)
    if family == "grid":
        n = p["n"]
        return grid_cl_window(n)
    if family == "ilt_path":
        n, t = p["n"], p["t"]
        if n < 3 or t < 1:
            raise GraphError("ilt_path forms need n >= 3 and t >= 1")
        v = (2 * n + 2) // 3
        if not (t == 1 and n % 3 == 2):
            v += 1
        return ClosedForm("ilt_path", p, "exact", v, v)
    raise StrategyError(f"unknown family {family!r}")


def grid_cl_window(n: int) -> ClosedForm:
    """Width-2 window containing the cooling number of the n x n grid.

    Restricted to ``n >= 2``: at ``n = 1`` the formula underflows while the
    actual value is 1.
    """
    if n < 2:
        raise GraphError(f"grid window needs n >= 2, got {n}")
    lo = 2 * n - 2 * ((n + 3).bit_length() - 1)
    return ClosedForm("grid", {"n": n}, "window", lo, lo + 2)


class _SimplicialPolicy:
    """Always pick the smallest uncooled node in the simplicial order."""

    def __init__(self, order: list[int]):
        self.order = order
        self.idx = 0

    def __call__(self, g: Graph, cooled: AbstractSet[int], t: int) -> int:
        while self.order[self.idx] in cooled:
            self.idx += 1
        v = self.order[self.idx]
        self.idx += 1
        return v


def grid_simplicial_strategy(n: int) -> CoolingTrace:
    """Cool the n x n grid by simplicial order; the round count equals its
    cooling number."""
    if n < 1:
        raise GraphError(f"grid needs n >= 1, got {n}")
    return run_cooling(gen_grid(n), _SimplicialPolicy(simplicial_order(n)))


def _diametral_path(g: Graph) -> list[int]:
    """A shortest path realizing the diameter, found by double sweep and
    verified (with exhaustive fallback) against the true diameter."""
    d = diameter(g)
    dist0 = bfs_distances(g, 0)
    a = dist0.index(max(dist0))
    dist_a = bfs_distances(g, a)
    b = dist_a.index(max(dist_a))
    if dist_a[b] != d:
        for u in range(g.n):  # double sweep missed; scan for a true pair
            du = bfs_distances(g, u)
            if max(du) == d:
                a, b, dist_a = u, du.index(d), du
                break
    path = [b]
    cur = b
    while cur != a:
        cur = min(w for w in g.adj[cur] if dist_a[w] == dist_a[cur] - 1)
        path.append(cur)
    path.reverse()
    if path[0] > path[-1]:  # normalize orientation for reproducible output
        path.reverse()
    return path


def path_diameter_strategy(g: Graph) -> list[int]:
    """Every-other-node sequence along a diametral path.

    Playing it yields at least ``ceil((diam + 2) / 2)`` rounds: the cooled
    set stays inside a ball around the path's start that grows too slowly to
    swallow the far end any sooner.
    """
    path = _diametral_path(g)
    d = len(path) - 1
    want = (d + 3) // 2  # ceil((d + 2) / 2)
    return [path[2 * i] for i in range(want) if 2 * i <= d]


def caterpillar_strategy(d: int) -> list[int]:
    """First spine leaf, then every pendant in spine order.

    Exactly optimal: the run lasts ``d`` rounds on the complete caterpillar
    of length ``d``, with spine node ``i`` cooled in round ``i + 1``.
    """
    if d < 3:
        raise GraphError(f"complete caterpillar needs d >= 3, got {d}")
    return [0] + [d + j - 1 for j in range(1, d - 1)]


class _SpiderSchedule:
    """Two-phase leg schedule; one scripted pick per round, then auto-extend.

    Phase 1 drains legs ``1..m'`` from the far end inward with halving round
    budgets; phase 2 races the spread down fresh legs ``m'+1..2m'`` from the
    head outward with the budgets reversed.
    """

    def __init__(self, m: int, r: int):
        m_prime = min(m, _ceil_log2(r + 1))
        legs = spider_leg_nodes(2 * m, r)
        plan: list[tuple[list[int], bool]] = []  # (leg nodes, pick farthest?)
        for i in range(1, m_prime + 1):
            plan += [(legs[i - 1], True)] * ((r + 1) // 2 ** (m_prime + 1 - i))
        for i in range(1, m_prime + 1):
            plan += [(legs[m_prime + i - 1], False)] * ((r + 1) // 2**i)
        self.plan = plan
        self.idx = 0

    def __call__(self, g: Graph, cooled: AbstractSet[int], t: int) -> int:
        if self.idx < len(self.plan):
            leg, farthest = self.plan[self.idx]
            self.idx += 1
            candidates = [v for v in leg if v not in cooled]
            if not candidates:
                raise StrategyError(f"round {t}: scheduled leg already fully cooled")
            return candidates[-1] if farthest else candidates[0]
        return min(v for v in range(g.n) if v not in cooled)


@dataclass(frozen=True)
class SpiderStrategyResult:
    trace: CoolingTrace
    certified: ClosedForm


def spider_strategy(m: int, r: int) -> SpiderStrategyResult:
    """Run the two-phase schedule on the spider with ``2m`` legs of length ``r``.

    Returns the trace plus the certified closed form for this shape. The
    certification hypotheses require an even leg count and equal lengths,
    which the ``(m, r)`` parameterization enforces.
    """
    if m < 1:
        raise StrategyError("spider strategy needs m >= 1 (2m legs, so an even leg count)")
    if r < 1:
        raise StrategyError("spider strategy needs legs of length r >= 1")
    g = gen_spider(2 * m, r)
    trace = run_cooling(g, _SpiderSchedule(m, r))
    return SpiderStrategyResult(trace, closed_form("spider", {"m": m, "r": r}))


def ilt_path_strategy(n: int, t: int) -> list[int]:
    """Clone-node sequence achieving the closed form on the t-fold ILT of a path.

    Picks last-iteration clones of base path nodes ``1, 2, 4, 5, 7, 8, ...``
    (skipping every third), ``ceil(2n/3)`` picks in total.
    """
    if n < 3:
        raise GraphError(f"ilt path strategy needs n >= 3, got {n}")
    if t < 1:
        raise GraphError(f"ilt path strategy needs t >= 1, got {t}")
    prev_order = n * 2 ** (t - 1)  # clone of original node b is prev_order + b
    k = (2 * n + 2) // 3
    seq = []
    for i in range(1, k + 1):
        base = i + (i - 1) // 2 - 1
        seq.append(prev_order + base)
    return seq


def ilt_lift_sequence(seq: list[int] | tuple[int, ...], source: IltGraph,
                      target: IltGraph) -> list[int]:
    """Map a cooling sequence of a deep ILT iterate onto a 2-step iterate.

    Entry ``u`` maps to a final-iteration clone (in ``target``) of its base
    origin; consecutive entries with the same origin take distinct clones,
    which exist because the target has at least two final-iteration clones
    per base node. The lifted sequence has the same length and stays valid.
    """
    if target.t < 2:
        raise StrategyError("lift target must be at least a 2-step iterate")
    if source.base_n != target.base_n:
        raise StrategyError("source and target must come from the same base graph")
    out: list[int] = []
    prev_base = None
    seen: set[int] = set()
    for u in seq:
        base = source.origin[u]
        if base != prev_base and base in seen:
            # a valid sequence can revisit an origin only in the very next
            # round: two co-layer nodes are within distance 2 of each other
            raise StrategyError("origin recurs after a gap; input was not a cooling sequence")
        clones = target.last_clones[base]
        out.append(clones[1] if base == prev_base else clones[0])
        seen.add(base)
        prev_base = base
    return out


# small drivers used by the CLI and the verification suites

def grid_strategy_with_window(n: int) -> tuple[CoolingTrace, ClosedForm]:
    return grid_simplicial_strategy(n), grid_cl_window(n)


def caterpillar_strategy_trace(d: int) -> CoolingTrace:
    return validate_sequence(gen_complete_caterpillar(d), caterpillar_strategy(d))


def ilt_path_strategy_trace(n: int, t: int) -> CoolingTrace:
    return validate_sequence(ilt_t(gen_path(n), t).graph, ilt_path_strategy(n, t))
