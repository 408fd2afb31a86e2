from __future__ import annotations

import random

import pytest

from coolnum.corpus import random_connected_graph
from coolnum.engine import validate_sequence
from coolnum.generators import gen_complete_caterpillar, gen_cycle, gen_grid, gen_path, gen_spider
from coolnum.graphs import DisconnectedGraphError, build_graph, diameter
from coolnum.solver import (
    GraphTooLargeError,
    SearchLimits,
    TimeBudgetExceededError,
    burning_number,
    cooling_number,
    max_sequence_length,
)


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def small_sample():
    rng = random.Random(31)
    graphs = [gen_path(6), gen_cycle(7), gen_spider(3, 2), gen_complete_caterpillar(4),
              gen_grid(3), complete_graph(5)]
    for _ in range(12):
        graphs.append(random_connected_graph(rng, rng.randrange(3, 10), 0.25))
    return graphs


class TestCoolingNumber:
    def test_p7(self):
        assert cooling_number(gen_path(7)).value == 4

    def test_c6(self):
        assert cooling_number(gen_cycle(6)).value == 3

    def test_k4(self):
        assert cooling_number(complete_graph(4)).value == 2

    def test_witness_replays_to_value(self):
        for g in small_sample():
            res = cooling_number(g)
            replay = validate_sequence(g, res.witness.sources)
            assert replay.num_rounds == res.value
            assert replay == res.witness

    def test_no_memo_matches(self):
        for g in small_sample():
            if g.n <= 9:
                a = cooling_number(g).value
                b = cooling_number(g, use_memo=False, limits=SearchLimits(max_nodes=10)).value
                assert a == b

    def test_no_prune_matches(self):
        for g in small_sample():
            if g.n <= 10:
                a = cooling_number(g)
                b = cooling_number(g, prune=False)
                assert a.value == b.value
                assert a.witness == b.witness  # lowest-id tie-break is prune-independent

    def test_brute_force_agreement_on_tiny_graphs(self):
        # independent oracle: plain DFS over frozensets of cooled nodes,
        # no bitmasks, no memo, no pruning
        def brute(g):
            n = g.n

            def rec(cooled: frozenset[int]) -> int:
                if len(cooled) == n:
                    return 0
                spread = set(cooled)
                for v in cooled:
                    spread.update(g.adj[v])
                if len(spread) == n:
                    return 1
                return 1 + max(rec(frozenset(spread | {s}))
                               for s in range(n) if s not in spread)

            if n == 1:
                return 1
            return 1 + max(rec(frozenset({s})) for s in range(n))

        rng = random.Random(41)
        graphs = [gen_path(6), gen_cycle(6), gen_spider(3, 1), gen_spider(2, 2),
                  gen_complete_caterpillar(3), gen_grid(2), complete_graph(4)]
        graphs += [random_connected_graph(rng, rng.randrange(2, 8), 0.3) for _ in range(10)]
        for g in graphs:
            assert cooling_number(g).value == brute(g)

    def test_over_limit_refused(self):
        with pytest.raises(GraphTooLargeError):
            cooling_number(gen_path(21))
        # explicit limit overrides the default cap
        assert cooling_number(gen_path(21), SearchLimits(max_nodes=21)).value == 11

    def test_disconnected_refused(self):
        with pytest.raises(DisconnectedGraphError):
            cooling_number(build_graph(4, [(0, 1), (2, 3)]))

    def test_time_budget_zero_trips(self):
        with pytest.raises(TimeBudgetExceededError):
            cooling_number(gen_path(16), SearchLimits(max_nodes=16, time_budget=0.0),
                           prune=False)

    def test_cycle_symmetry_restriction_matches_full_search(self):
        for n in (5, 8, 11):
            g = gen_cycle(n)
            full = cooling_number(g)
            orbit = cooling_number(g, first_sources=[0])
            assert full.value == orbit.value
            assert full.witness == orbit.witness

    def test_parallel_jobs_match_serial(self):
        for g in (gen_cycle(9), gen_complete_caterpillar(5)):
            serial = cooling_number(g)
            parallel = cooling_number(g, jobs=3)
            assert serial.value == parallel.value
            assert serial.witness == parallel.witness

    def test_stats_populated(self):
        res = cooling_number(gen_path(8))
        assert res.stats.expanded > 0
        assert res.stats.wall_time >= 0.0


class TestMaxSequenceLength:
    def test_k1(self):
        assert max_sequence_length(gen_path(1)).value == 1

    def test_p2(self):
        assert max_sequence_length(gen_path(2)).value == 1

    def test_within_one_of_cooling_number(self):
        for g in small_sample():
            s = max_sequence_length(g).value
            cl = cooling_number(g).value
            assert s in (cl - 1, cl)

    def test_witness_source_count_is_value(self):
        for g in small_sample():
            res = max_sequence_length(g)
            assert len(res.witness.sources) == res.value

    def test_brute_force_agreement_on_tiny_graphs(self):
        # independent oracle counting selections instead of rounds
        def brute(g):
            n = g.n

            def rec(cooled: frozenset[int]) -> int:
                if len(cooled) == n:
                    return 0
                spread = set(cooled)
                for v in cooled:
                    spread.update(g.adj[v])
                if len(spread) == n:
                    return 0
                return 1 + max(rec(frozenset(spread | {s}))
                               for s in range(n) if s not in spread)

            if n == 1:
                return 1
            return 1 + max(rec(frozenset({s})) for s in range(n))

        rng = random.Random(59)
        graphs = [gen_path(5), gen_path(2), gen_cycle(7), gen_spider(3, 1),
                  gen_complete_caterpillar(3), complete_graph(4)]
        graphs += [random_connected_graph(rng, rng.randrange(2, 8), 0.3) for _ in range(10)]
        for g in graphs:
            assert max_sequence_length(g).value == brute(g)


class TestBurningNumber:
    def test_p9(self):
        assert burning_number(gen_path(9)).value == 3

    def test_k5(self):
        assert burning_number(complete_graph(5)).value == 2

    def test_c8(self):
        assert burning_number(gen_cycle(8)).value == 3

    def test_brute_force_agreement_on_tiny_graphs(self):
        # independent oracle: DFS over the actual burning process
        def brute(g):
            n = g.n

            def rec(burned: frozenset[int]) -> int:
                if len(burned) == n:
                    return 0
                spread = set(burned)
                for v in burned:
                    spread.update(g.adj[v])
                if len(spread) == n:
                    return 1
                return 1 + min(rec(frozenset(spread | {s}))
                               for s in range(n) if s not in spread)

            if n == 1:
                return 1
            return 1 + min(rec(frozenset({s})) for s in range(n))

        rng = random.Random(97)
        graphs = [gen_path(5), gen_cycle(6), gen_spider(3, 1), gen_complete_caterpillar(3)]
        graphs += [random_connected_graph(rng, rng.randrange(2, 8), 0.3) for _ in range(8)]
        for g in graphs:
            assert burning_number(g).value == brute(g)

    def test_witness_replays_to_value(self):
        for g in small_sample():
            res = burning_number(g)
            replay = validate_sequence(g, res.witness.sources)
            assert replay.num_rounds == res.value

    def test_at_most_cooling_number(self):
        for g in small_sample():
            assert burning_number(g).value <= cooling_number(g).value

    def test_over_limit_refused(self):
        with pytest.raises(GraphTooLargeError):
            burning_number(gen_path(25))


class TestBoundsDuringSearch:
    def test_diameter_sandwich_on_sample(self):
        for g in small_sample():
            cl = cooling_number(g).value
            d = diameter(g)
            assert (d + 3) // 2 <= cl <= min(d + 1, (g.n + 2) // 2)


def test_sequence_length_tracks_cooling_number_over_corpus(corpus_with_cl):
    for name, g, res in corpus_with_cl:
        s = max_sequence_length(g).value
        assert s in (res.value - 1, res.value), (name, s, res.value)


def test_five_by_five_grid_needs_seven_rounds():
    # pinned: exact search, the profile recurrence, and the simplicial
    # strategy all give 7, one above the width-2 window (see README notes)
    from coolnum.bounds import grid_iso_profile, iso_upper_bound
    from coolnum.strategies import grid_simplicial_strategy

    assert cooling_number(gen_grid(5), SearchLimits(max_nodes=25)).value == 7
    assert iso_upper_bound(grid_iso_profile(5)).value == 7
    assert grid_simplicial_strategy(5).num_rounds == 7
