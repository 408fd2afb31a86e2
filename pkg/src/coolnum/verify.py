"""Named verification suites: each checks one documented claim against the
exact solver or the engine, over concrete instance sets sized for a quick run.

Suites report per-check rows rather than raising, so the CLI can print a
table and the caller decides how to treat failures. A few claims are known
to fail as stated (the spider exact case, the diameter-two burning
comparison, the grid window at n = 5); the rows carry enough detail to see
exactly where and why. See the README's acceptance notes.
"""

from __future__ import annotations

import io
from contextlib import redirect_stdout
from dataclasses import dataclass, field

from .bounds import grid_iso_profile, iso_profile_exact, iso_upper_bound
from .corpus import build_corpus
from .engine import validate_sequence
from .generators import gen_complete_caterpillar, gen_cycle, gen_grid, gen_path, gen_spider
from .graphs import Graph, build_graph, diameter
from .ilt import ilt, ilt_t
from .solver import SearchLimits, burning_number, cooling_number, max_sequence_length
from .strategies import (
    caterpillar_strategy_trace,
    closed_form,
    grid_cl_window,
    grid_simplicial_strategy,
    ilt_path_strategy_trace,
    spider_strategy,
)


@dataclass
class CheckRow:
    name: str
    instances: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SuiteReport:
    suite: str
    rows: list[CheckRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def _check(name: str, cases) -> CheckRow:
    """cases: iterable of (label, passed) pairs."""
    row = CheckRow(name, 0)
    for label, passed in cases:
        row.instances += 1
        if not passed:
            row.failures.append(label)
    return row


def suite_path_formula() -> SuiteReport:
    def cases():
        for n in range(1, 15):
            got = cooling_number(gen_path(n)).value
            yield f"P_{n}: solver {got} vs {(n + 2) // 2}", got == (n + 2) // 2

    return SuiteReport("path-formula", [_check("cooling of paths", cases())])


def suite_cycle_formula() -> SuiteReport:
    def cases():
        for n in range(3, 15):
            got = cooling_number(gen_cycle(n), first_sources=[0]).value
            yield f"C_{n}: solver {got} vs {(n + 4) // 3}", got == (n + 4) // 3

    return SuiteReport("cycle-formula", [_check("cooling of cycles", cases())])


def suite_caterpillar() -> SuiteReport:
    def solver_cases():
        for d in range(3, 8):
            got = cooling_number(gen_complete_caterpillar(d)).value
            yield f"CC_{d}: solver {got} vs {d}", got == d

    def strategy_cases():
        for d in range(3, 8):
            got = caterpillar_strategy_trace(d).num_rounds
            yield f"CC_{d}: strategy {got} vs {d}", got == d

    return SuiteReport("caterpillar", [
        _check("solver value", solver_cases()),
        _check("strategy achieves it", strategy_cases()),
    ])


def suite_bounds_sandwich() -> SuiteReport:
    def cases():
        for name, g in build_corpus():
            cl = cooling_number(g).value
            d = diameter(g)
            lo = (d + 3) // 2
            hi = min(d + 1, (g.n + 2) // 2)
            yield f"{name}: {lo} <= {cl} <= {hi}", lo <= cl <= hi

    return SuiteReport("bounds-sandwich", [_check("diameter/order sandwich", cases())])


def suite_burning_cross() -> SuiteReport:
    corpus = build_corpus()
    results = [(name, g, burning_number(g).value, cooling_number(g).value)
               for name, g in corpus]

    def le_cases():
        for name, _, b, cl in results:
            yield f"{name}: b={b} CL={cl}", b <= cl

    def diam2_cases():
        for name, g, b, cl in results:
            if diameter(g) <= 2:
                yield f"{name}: b={b} CL={cl}", b == cl

    p9 = burning_number(gen_path(9)).value
    return SuiteReport("burning-cross", [
        _check("b <= CL everywhere", le_cases()),
        _check("b == CL when diameter <= 2", diam2_cases()),
        _check("b(P_9) == 3", [(f"P_9: b={p9}", p9 == 3)]),
    ])


def suite_iso_smoothness() -> SuiteReport:
    corpus = build_corpus()

    def smooth_cases():
        for name, g in corpus:
            bad = iso_profile_exact(g).smoothness_violations()
            yield f"{name}: violations {bad[:3]}", not bad

    def upper_cases():
        for name, g in corpus:
            bound = iso_upper_bound(iso_profile_exact(g)).value
            cl = cooling_number(g).value
            yield f"{name}: I={bound} CL={cl}", bound >= cl

    def path_cases():
        for n in range(1, 15):
            bound = iso_upper_bound(iso_profile_exact(gen_path(n))).value
            cl = cooling_number(gen_path(n)).value
            yield f"P_{n}: I={bound} CL={cl}", bound == cl

    return SuiteReport("iso-smoothness", [
        _check("border smoothness", smooth_cases()),
        _check("recurrence upper bound", upper_cases()),
        _check("tight on paths", path_cases()),
    ])


def suite_grid_window(max_n: int = 40) -> SuiteReport:
    def cases():
        for n in range(2, max_n + 1):
            rounds = grid_simplicial_strategy(n).num_rounds
            w = grid_cl_window(n)
            yield f"G_{n}: {rounds} in [{w.lo}, {w.hi}]", w.contains(rounds)

    return SuiteReport("grid-window", [_check("strategy rounds inside window", cases())])


def suite_grid_profile() -> SuiteReport:
    def cases():
        for n in (2, 3, 4):
            got = grid_iso_profile(n)
            want = iso_profile_exact(gen_grid(n))
            yield f"G_{n}", got.phi == want.phi

    return SuiteReport("grid-profile", [_check("simplicial profile matches enumeration", cases())])


def suite_grid_solver() -> SuiteReport:
    def cases():
        for n in (2, 3, 4):
            rounds = grid_simplicial_strategy(n).num_rounds
            exact = cooling_number(gen_grid(n)).value
            yield f"G_{n}: strategy {rounds} solver {exact}", rounds == exact

    return SuiteReport("grid-solver", [_check("simplicial strategy is optimal", cases())])


def suite_ilt() -> SuiteReport:
    limits = SearchLimits(max_nodes=32)

    def formula_cases():
        for n in (3, 4, 5):
            for t in (1, 2):
                g = ilt_t(gen_path(n), t).graph
                got = cooling_number(g, limits).value
                want = closed_form("ilt_path", {"n": n, "t": t}).lo
                yield f"ILT_{t}(P_{n}): solver {got} vs {want}", got == want

    def strategy_cases():
        for n in (3, 4, 5, 6):
            for t in (1, 2):
                rounds = ilt_path_strategy_trace(n, t).num_rounds
                want = closed_form("ilt_path", {"n": n, "t": t}).lo
                yield f"ILT_{t}(P_{n}): strategy {rounds} vs {want}", rounds == want

    def monotone_cases():
        for name, g in build_corpus():
            if 2 * g.n > 24:
                continue
            cl = cooling_number(g)
            lifted = validate_sequence(ilt(g).graph, cl.witness.sources)
            yield f"{name}: replay {lifted.num_rounds} vs CL {cl.value}", lifted.num_rounds >= cl.value

    def fixpoint_cases():
        for name, g in _ilt_base_graphs():
            s2 = max_sequence_length(ilt_t(g, 2).graph, limits).value
            s3 = max_sequence_length(ilt_t(g, 3).graph, limits).value
            yield f"{name}: s2={s2} s3={s3}", s2 == s3

    def step_cases():
        for name, g in _ilt_base_graphs():
            c2 = cooling_number(ilt_t(g, 2).graph, limits).value
            c3 = cooling_number(ilt_t(g, 3).graph, limits).value
            yield f"{name}: CL2={c2} CL3={c3}", c2 <= c3 <= c2 + 1

    return SuiteReport("ilt", [
        _check("path formula", formula_cases()),
        _check("path strategy", strategy_cases()),
        _check("one step never decreases", monotone_cases()),
        _check("second step fixes sequence length", fixpoint_cases()),
        _check("later steps add at most one round", step_cases()),
    ])


def _ilt_base_graphs() -> list[tuple[str, Graph]]:
    return [
        ("P_2", gen_path(2)),
        ("P_3", gen_path(3)),
        ("K_3", build_graph(3, [(0, 1), (0, 2), (1, 2)])),
        ("star-3", gen_spider(3, 1)),
    ]


def suite_spider() -> SuiteReport:
    def lower_cases():
        for m in (1, 2, 3):
            for r in range(1, 8):
                res = spider_strategy(m, r)
                lo = 2 * sum((r + 1) // 2**i for i in range(1, m + 1))
                yield f"spider(2m={2 * m}, r={r}): rounds {res.trace.num_rounds} vs {lo}", \
                    res.trace.num_rounds >= lo

    def exact_cases():
        for m, r in ((1, 1), (2, 2), (2, 3)):
            got = cooling_number(gen_spider(2 * m, r)).value
            yield f"spider(2m={2 * m}, r={r}): solver {got} vs {2 * r + 1}", got == 2 * r + 1

    return SuiteReport("spider", [
        _check("strategy meets the certified lower bound", lower_cases()),
        _check("exact value above the log threshold", exact_cases()),
    ])


def suite_reference_traces() -> SuiteReport:
    rows = []

    cc6 = gen_complete_caterpillar(6)
    trace = validate_sequence(cc6, [0, 6, 7, 8, 9])
    want = {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 2, 7: 3, 8: 4, 9: 5}
    rows.append(_check("caterpillar reference run", [
        ("rounds == 6", trace.num_rounds == 6),
        (f"cooling rounds {trace.cooled_round}", trace.cooled_round == want),
    ]))

    iltp6 = ilt_t(gen_path(6), 1).graph
    trace = validate_sequence(iltp6, [6, 7, 9, 10])
    want = {0: 2, 1: 2, 2: 3, 3: 4, 4: 4, 5: 5, 6: 1, 7: 2, 8: 3, 9: 3, 10: 4, 11: 5}
    rows.append(_check("ilt path reference run", [
        ("rounds == 5", trace.num_rounds == 5),
        (f"cooling rounds {trace.cooled_round}", trace.cooled_round == want),
    ]))
    return SuiteReport("reference-traces", rows)


def suite_determinism() -> SuiteReport:
    import tempfile
    from pathlib import Path

    from . import cli
    from .graph_io import write_graph

    with tempfile.TemporaryDirectory() as tmp:
        gpath = Path(tmp) / "c8.json"
        write_graph(gen_cycle(8), gpath)
        outputs = []
        for run in range(2):
            tpath = Path(tmp) / f"trace{run}.json"
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = cli.main(["exact", "--in", str(gpath), "--jobs", "2",
                                 "--trace-out", str(tpath), "--json"])
            outputs.append((code, buf.getvalue(), tpath.read_bytes()))
    same = outputs[0] == outputs[1]
    row = _check("exact twice with --jobs 2", [
        ("exit codes zero", outputs[0][0] == 0 and outputs[1][0] == 0),
        ("byte-identical stdout and trace", same),
    ])
    return SuiteReport("determinism", [row])


SUITES = {
    "path-formula": suite_path_formula,
    "cycle-formula": suite_cycle_formula,
    "caterpillar": suite_caterpillar,
    "bounds-sandwich": suite_bounds_sandwich,
    "burning-cross": suite_burning_cross,
    "iso-smoothness": suite_iso_smoothness,
    "grid-window": suite_grid_window,
    "grid-profile": suite_grid_profile,
    "grid-solver": suite_grid_solver,
    "ilt": suite_ilt,
    "spider": suite_spider,
    "reference-traces": suite_reference_traces,
    "determinism": suite_determinism,
}


class UnknownSuiteError(ValueError):
    pass


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    return SUITES[name]()
