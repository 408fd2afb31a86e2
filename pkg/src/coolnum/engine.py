"""Exact round semantics of the cooling and burning spread processes.

Both processes share one round structure. In round 1 a single source is
chosen. In every later round the cooling first spreads: every node that was
cooled by the end of the previous round cools its uncooled neighbors, one
layer only. Then, if any node is still uncooled, one of them MUST be chosen
as a new source; a policy cannot pass. The process ends in the first round
whose end state has every node cooled. Cooling maximizes the number of
rounds, burning minimizes it; the mechanics are identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import AbstractSet, Protocol

from .graphs import DisconnectedGraphError, Graph, GraphError


class SourcePolicy(Protocol):
    """Decision procedure: given (graph, cooled set after spread, round index),
    return one uncooled node id. Must be deterministic for a fixed instance;
    the cooled set argument must be treated as read-only."""

    def __call__(self, g: Graph, cooled: AbstractSet[int], round_index: int) -> int: ...


class InvalidSourceError(ValueError):
    """A policy or sequence picked an unusable source node."""

    def __init__(self, node: int | None, round_index: int, reason: str):
        self.node = node
        self.round = round_index
        super().__init__(f"round {round_index}: {reason}")


@dataclass(frozen=True)
class RoundRecord:
    """One round: the set cooled by spread, and the source chosen (if any)."""

    round: int
    spread: frozenset[int]
    source: int | None


@dataclass(frozen=True)
class CoolingTrace:
    """Complete round-by-round record of one run; the auditable witness."""

    rounds: tuple[RoundRecord, ...]
    final_cooled: frozenset[int]

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(r.source for r in self.rounds if r.source is not None)

    @cached_property
    def cooled_round(self) -> dict[int, int]:
        """Map node id -> round in which it became cooled."""
        out: dict[int, int] = {}
        for rec in self.rounds:
            for v in rec.spread:
                out[v] = rec.round
            if rec.source is not None:
                out[rec.source] = rec.round
        return out


def _run(g: Graph, policy: SourcePolicy) -> CoolingTrace:
    if g.n < 1:
        raise GraphError("process needs at least one node")
    if not g.is_connected:
        raise DisconnectedGraphError("process requires a connected graph")
    cooled: set[int] = set()
    border: set[int] = set()  # uncooled nodes adjacent to a cooled node
    records: list[RoundRecord] = []
    t = 0
    while len(cooled) < g.n:
        t += 1
        newly = border
        spread = frozenset(newly)
        cooled |= newly
        border = {w for v in newly for w in g.adj[v] if w not in cooled}
        source: int | None = None
        if len(cooled) < g.n:
            source = policy(g, cooled, t)
            if not isinstance(source, int) or not (0 <= source < g.n):
                raise InvalidSourceError(source, t, f"policy returned invalid node {source!r}")
            if source in cooled:
                raise InvalidSourceError(source, t, f"node {source} is already cooled")
            cooled.add(source)
            border.discard(source)
            for w in g.adj[source]:
                if w not in cooled:
                    border.add(w)
        records.append(RoundRecord(t, spread, source))
    return CoolingTrace(tuple(records), frozenset(cooled))


def run_cooling(g: Graph, policy: SourcePolicy) -> CoolingTrace:
    """Run the cooling process to completion under ``policy``.

    The trace's round count is the quantity the cooling number maximizes.
    """
    return _run(g, policy)


def run_burning(g: Graph, policy: SourcePolicy) -> CoolingTrace:
    """Run the burning process under ``policy``; same mechanics as cooling.

    The trace's round count is the burning time of this policy, which the
    burning number minimizes.
    """
    return _run(g, policy)


class _SequencePolicy:
    """Plays a fixed source list, then auto-extends with the smallest uncooled id."""

    def __init__(self, seq: list[int]):
        self.seq = seq
        self.idx = 0

    def __call__(self, g: Graph, cooled: AbstractSet[int], t: int) -> int:
        if self.idx < len(self.seq):
            v = self.seq[self.idx]
            self.idx += 1
            if not (0 <= v < g.n):
                raise InvalidSourceError(v, t, f"sequence element {v} outside 0..{g.n - 1}")
            if v in cooled:
                raise InvalidSourceError(v, t, f"sequence element {v} is already cooled")
            return v
        return min(v for v in range(g.n) if v not in cooled)


def validate_sequence(g: Graph, seq: list[int] | tuple[int, ...]) -> CoolingTrace:
    """Play ``seq`` as the prefix of a run and return the full trace.

    Round ``i`` must select ``seq[i-1]``, which must be uncooled at that
    point (repeats surface as already-cooled). If the sequence runs out while
    uncooled nodes remain at a selection point, the run auto-extends with the
    smallest-id uncooled node, so the trace's round count reads as a lower
    bound on the cooling number. A sequence the process finishes before
    exhausting is rejected.
    """
    policy = _SequencePolicy(list(seq))
    trace = _run(g, policy)
    if policy.idx < len(policy.seq):
        leftover = policy.seq[policy.idx :]
        raise InvalidSourceError(
            leftover[0],
            trace.num_rounds,
            f"process ended after round {trace.num_rounds} with sequence elements {leftover} never selected",
        )
    return trace


def smallest_uncooled_policy(g: Graph, cooled: AbstractSet[int], t: int) -> int:
    """Baseline policy: always pick the smallest uncooled id."""
    return min(v for v in range(g.n) if v not in cooled)


def spread_step(g: Graph, cooled: AbstractSet[int]) -> frozenset[int]:
    """One pure spread step: ``cooled`` together with all its neighbors."""
    if not cooled:
        raise GraphError("spread_step needs a nonempty cooled set")
    out = set(cooled)
    for v in cooled:
        out.update(g.adj[v])
    return frozenset(out)


def trace_to_json_obj(trace: CoolingTrace) -> dict:
    return {
        "rounds": [
            {"round": r.round, "spread": sorted(r.spread), "source": r.source}
            for r in trace.rounds
        ]
    }


def trace_from_json_obj(obj: dict) -> CoolingTrace:
    if not isinstance(obj, dict) or "rounds" not in obj:
        raise ValueError('trace JSON must be an object with a "rounds" list')
    records = []
    cooled: set[int] = set()
    for entry in obj["rounds"]:
        spread = frozenset(entry["spread"])
        records.append(RoundRecord(entry["round"], spread, entry["source"]))
        cooled |= spread
        if entry["source"] is not None:
            cooled.add(entry["source"])
    return CoolingTrace(tuple(records), frozenset(cooled))


def write_trace(trace: CoolingTrace, path: str | Path) -> None:
    Path(path).write_text(json.dumps(trace_to_json_obj(trace), separators=(", ", ": ")) + "\n")


def read_trace(path: str | Path) -> CoolingTrace:
    return trace_from_json_obj(json.loads(Path(path).read_text()))
