from __future__ import annotations

import random

import pytest

from coolnum.corpus import random_connected_graph
from coolnum.engine import (
    InvalidSourceError,
    read_trace,
    run_burning,
    run_cooling,
    smallest_uncooled_policy,
    spread_step,
    trace_from_json_obj,
    trace_to_json_obj,
    validate_sequence,
    write_trace,
)
from coolnum.generators import (
    gen_complete_caterpillar,
    gen_cycle,
    gen_grid,
    gen_path,
    grid_node,
)
from coolnum.graphs import DisconnectedGraphError, build_graph, diameter


class TestRunCooling:
    def test_single_node_one_round(self):
        trace = run_cooling(gen_path(1), smallest_uncooled_policy)
        assert trace.num_rounds == 1
        assert trace.sources == (0,)

    def test_p2_forced_two_rounds(self):
        trace = run_cooling(gen_path(2), smallest_uncooled_policy)
        assert trace.num_rounds == 2
        assert trace.sources == (0,)  # round 2's spread cools node 1 first

    def test_c8_best_sequence_gives_four(self):
        trace = validate_sequence(gen_cycle(8), [0, 2, 5])
        assert trace.num_rounds == 4

    def test_round_one_has_empty_spread_and_a_source(self):
        trace = run_cooling(gen_cycle(5), smallest_uncooled_policy)
        assert trace.rounds[0].spread == frozenset()
        assert trace.rounds[0].source is not None

    def test_policy_returning_cooled_node_rejected(self):
        def bad(g, cooled, t):
            return 0

        with pytest.raises(InvalidSourceError) as err:
            run_cooling(gen_path(4), bad)
        assert err.value.round == 2
        assert err.value.node == 0

    def test_policy_returning_out_of_range_rejected(self):
        with pytest.raises(InvalidSourceError):
            run_cooling(gen_path(3), lambda g, cooled, t: 99)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            run_cooling(build_graph(4, [(0, 1), (2, 3)]), smallest_uncooled_policy)


class TestValidateSequence:
    def test_p5_every_other_node(self):
        trace = validate_sequence(gen_path(5), [0, 2, 4])
        assert trace.num_rounds == 3
        assert trace.sources == (0, 2, 4)

    def test_repeat_names_element_and_round(self):
        with pytest.raises(InvalidSourceError) as err:
            validate_sequence(gen_cycle(8), [0, 0])
        assert err.value.node == 0
        assert err.value.round == 2
        assert "already cooled" in str(err.value)

    def test_caterpillar_reference_sequence(self):
        trace = validate_sequence(gen_complete_caterpillar(6), [0, 6, 7, 8, 9])
        assert trace.num_rounds == 6

    def test_auto_extends_with_smallest_id(self):
        # on C6, after (0,) the run keeps selecting the smallest uncooled node
        trace = validate_sequence(gen_cycle(6), [0])
        assert trace.num_rounds >= 2
        assert trace.sources[0] == 0
        assert len(trace.sources) >= 2

    def test_unplayable_tail_rejected(self):
        with pytest.raises(InvalidSourceError) as err:
            validate_sequence(gen_path(2), [0, 1])
        assert "never selected" in str(err.value)


class TestSpreadStep:
    def test_cycle_arc(self):
        assert spread_step(gen_cycle(8), {0}) == frozenset({7, 0, 1})

    def test_fixed_point(self):
        g = gen_path(4)
        assert spread_step(g, {0, 1, 2, 3}) == frozenset({0, 1, 2, 3})

    def test_grid_corner(self):
        g = gen_grid(2)
        got = spread_step(g, {grid_node((1, 1), 2)})
        assert got == frozenset({grid_node((1, 1), 2), grid_node((1, 2), 2), grid_node((2, 1), 2)})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            spread_step(gen_path(3), set())


class TestRunBurning:
    def test_single_node(self):
        assert run_burning(gen_path(1), smallest_uncooled_policy).num_rounds == 1

    def test_p2(self):
        assert run_burning(gen_path(2), smallest_uncooled_policy).num_rounds == 2

    def test_p9_good_sequence_gives_three(self):
        trace = validate_sequence(gen_path(9), [2, 6, 8])
        assert trace.num_rounds == 3


class _SeededPolicy:
    """Deterministic pseudo-random policy for property checks."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def __call__(self, g, cooled, t):
        return self.rng.choice([v for v in range(g.n) if v not in cooled])


def _random_runs():
    rng = random.Random(7)
    for i in range(40):
        n = rng.randrange(2, 11)
        g = random_connected_graph(rng, n, rng.choice((0.1, 0.3, 0.6)))
        yield g, _SeededPolicy(seed=1000 + i)


class TestTraceInvariants:
    def test_structure_over_random_runs(self):
        for g, policy in _random_runs():
            trace = run_cooling(g, policy)
            cooled: set[int] = set()
            for rec in trace.rounds:
                if rec.round == 1:
                    assert rec.spread == frozenset()
                else:
                    # spread is exactly the border of the previous cooled set
                    border = {w for v in cooled for w in g.adj[v]} - cooled
                    assert rec.spread == border
                    assert len(rec.spread) >= 1
                assert not (rec.source is not None and rec.source in rec.spread)
                cooled |= rec.spread
                if rec.source is not None:
                    cooled.add(rec.source)
                else:
                    assert len(cooled) == g.n  # sources are mandatory while available
            assert cooled == trace.final_cooled
            assert len(cooled) == g.n

    def test_rounds_minus_sources_in_zero_one(self):
        for g, policy in _random_runs():
            trace = run_cooling(g, policy)
            assert trace.num_rounds - len(trace.sources) in (0, 1)

    def test_rounds_at_most_diameter_plus_one(self):
        for g, policy in _random_runs():
            assert run_cooling(g, policy).num_rounds <= diameter(g) + 1

    def test_determinism(self):
        g = gen_cycle(9)
        t1 = run_cooling(g, _SeededPolicy(5))
        t2 = run_cooling(g, _SeededPolicy(5))
        assert t1 == t2


class TestTraceSerialization:
    def test_json_round_trip(self, tmp_path):
        trace = validate_sequence(gen_cycle(8), [0, 2, 5])
        assert trace_from_json_obj(trace_to_json_obj(trace)) == trace
        path = tmp_path / "trace.json"
        write_trace(trace, path)
        assert read_trace(path) == trace

    def test_cooled_round_map(self):
        trace = validate_sequence(gen_complete_caterpillar(6), [0, 6, 7, 8, 9])
        assert trace.cooled_round[0] == 1
        assert trace.cooled_round[5] == 6
        assert trace.cooled_round[9] == 5
