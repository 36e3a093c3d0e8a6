"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v -s``.
"""
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from minenum.eds import all_minimal_neighbors
from minenum.model import EDGE, build_graph, canonicalize
from minenum.oracle import brute_minimal_sets, brute_restricted_family, size_bound
from minenum.properties import (
    PropertyInstance,
    is_minimal_pi_set,
    star_forest_vertex_deletion_membership,
)
from minenum.registry import make_property
from minenum.runner import collect
from minenum.steiner import build_multigraph, iter_st_paths

from conftest import record_criterion
from helpers import connected_component, random_graph, random_hypergraph, vs

SEED = 20240601
GRAPH_COUNT = 200
# keeps edge-indexed ground sets inside the exhaustive oracle's range
MAX_EDGES = 16

SWEEP = [
    ("vc", {}, Fraction(3)),
    ("bdd", {"degree_bound": 1}, Fraction(4)),
    ("bdd", {"degree_bound": 2}, Fraction(5)),
    ("sfed", {}, Fraction(4)),
    ("ds", {}, None),  # factor depends on the maximum degree
    ("eds", {}, Fraction(5)),
]


def sweep_graphs():
    rng = random.Random(SEED)
    out = []
    for _ in range(GRAPH_COUNT):
        n = rng.randint(1, 8)
        out.append(random_graph(rng, n, rng.randint(0, min(n * (n - 1) // 2, MAX_EDGES))))
    return out


@dataclass
class Tally:
    runs: int = 0
    incomplete: list = field(default_factory=list)
    oversized: list = field(default_factory=list)
    non_minimal: list = field(default_factory=list)
    duplicated: list = field(default_factory=list)
    worst: dict = field(default_factory=dict)

    def check(self, label, p, k, claim, emitted, infeasible, truth):
        self.runs += 1
        within = {s for s in truth if len(s) <= k}
        if infeasible:
            if within:
                self.incomplete.append((label, k, "declared infeasible"))
            return
        got = set(emitted)
        if not within <= got:
            self.incomplete.append((label, k, sorted(within - got)[:3]))
        if len(got) != len(emitted):
            self.duplicated.append((label, k))
        bad = [s for s in emitted if not is_minimal_pi_set(p, s)]
        if bad:
            self.non_minimal.append((label, k, bad[:3]))
        top = max(map(len, emitted))
        if top > size_bound(claim, k):
            self.oversized.append((label, k, top))
        if k:
            self.worst[label] = max(self.worst.get(label, Fraction(0)), Fraction(top, k))


def run_sweep(cap_inclusive):
    tally = Tally()
    for name, params, claim in SWEEP:
        label = name + (f"(d={params['degree_bound']})" if params else "")
        for g in sweep_graphs():
            p = make_property(name, g, **params)
            truth = brute_minimal_sets(p)
            for k in range(1, g.vertex_count + 1):
                got, outcome = collect(p, k, cap_inclusive=cap_inclusive)
                tally.check(label, p, k, claim or p.output_factor, got, outcome.infeasible, truth)
    return tally


def extra_factor_runs():
    """hs at rank 3 and steiner, which are not part of the graph sweep."""
    tally = Tally()
    rng = random.Random(SEED + 1)
    for _ in range(GRAPH_COUNT):
        h = random_hypergraph(rng, rng.randint(1, 9), rng.randint(0, 9), 3)
        p = make_property("hs", h, rank=3)
        truth = brute_minimal_sets(p)
        for k in range(1, h.vertex_count + 1):
            got, outcome = collect(p, k)
            tally.check("hs(d=3)", p, k, Fraction(7), got, outcome.infeasible, truth)
    for _ in range(GRAPH_COUNT):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.randint(1, min(n * (n - 1) // 2, MAX_EDGES)))
        comp_ = sorted(connected_component(g, rng.randrange(n)))
        terms = rng.sample(comp_, rng.randint(1, len(comp_)))
        p = make_property("steiner", g, terminals=terms)
        truth = brute_minimal_sets(p)
        for k in range(1, n + 1):
            got, outcome = collect(p, k)
            tally.check("steiner", p, k, Fraction(4), got, outcome.infeasible, truth)
    return tally


_CACHE = {}


def cached(key, build):
    if key not in _CACHE:
        start = time.perf_counter()
        _CACHE[key] = build()
        _CACHE[key + "-seconds"] = time.perf_counter() - start
    return _CACHE[key], _CACHE[key + "-seconds"]


def strict_sweep():
    return cached("strict", lambda: run_sweep(False))


def inclusive_sweep():
    return cached("inclusive", lambda: run_sweep(True))


def extra_runs():
    return cached("extra", extra_factor_runs)


def fmt_worst(tally):
    return ", ".join(f"{k} {float(v):.2f}" for k, v in sorted(tally.worst.items()))


def test_criterion_1_completeness():
    tally, seconds = strict_sweep()
    passed = not tally.incomplete and seconds < 300
    record_criterion(1, passed, f"{tally.runs} runs over {GRAPH_COUNT} graphs, "
                     f"{len(tally.incomplete)} incomplete, {seconds:.0f}s (limit 300s)")
    assert not tally.incomplete, tally.incomplete[:5]
    assert seconds < 300


def test_criterion_2_factor_caps():
    sweep, _ = strict_sweep()
    extra, _ = extra_runs()
    oversized = sweep.oversized + extra.oversized
    detail = f"max |S|/k: {fmt_worst(sweep)}, {fmt_worst(extra)}; {len(oversized)} violations"
    record_criterion(2, not oversized and not extra.incomplete, detail)
    assert not oversized, oversized[:5]
    assert not extra.incomplete, extra.incomplete[:5]


def test_criterion_3_minimal_and_distinct():
    sweep, _ = strict_sweep()
    extra, _ = extra_runs()
    bad = sweep.non_minimal + extra.non_minimal
    dup = sweep.duplicated + extra.duplicated
    record_criterion(3, not bad and not dup,
                     f"{sweep.runs + extra.runs} runs, {len(bad)} non-minimal, {len(dup)} duplicated")
    assert not bad and not dup


def restricted_instances():
    rng = random.Random(SEED + 2)
    for _ in range(30):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.randint(1, min(n * (n - 1) // 2, 12)))
        yield make_property("vc", g)
        yield make_property("bdd", g, degree_bound=1)
        yield make_property("bdd", g, degree_bound=2)
        yield make_property("sfed", g)
        yield make_property("ds", g)
        comp_ = sorted(connected_component(g, rng.randrange(n)))
        if len(comp_) > 1:
            yield make_property("steiner", g, terminals=rng.sample(comp_, rng.randint(2, len(comp_))))
        yield make_property("hs", random_hypergraph(rng, rng.randint(1, 12), rng.randint(1, 8), 3), rank=3)


def test_criterion_4_restricted_equivalence():
    triples = 0
    mismatches = []
    for p in restricted_instances():
        assert p.universe <= 12
        for x_set in brute_minimal_sets(p):
            for x in x_set:
                for k in range(p.universe + 1):
                    triples += 1
                    got = sorted(p.restricted_solver(p, k, x_set, x))
                    if got != brute_restricted_family(p, k, x_set, x):
                        mismatches.append((p.name, x_set, x, k))
    record_criterion(4, not mismatches, f"{triples} (X, x, k) triples, {len(mismatches)} mismatches")
    assert not mismatches, mismatches[:5]


def strongly_connected(nodes, arcs):
    def reach(start, adj):
        seen, stack = {start}, [start]
        while stack:
            for t in adj[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    start = min(nodes)
    reverse = {s: set() for s in nodes}
    for s, ts in arcs.items():
        for t in ts:
            reverse[t].add(s)
    return reach(start, arcs) == nodes and reach(start, reverse) == nodes


def test_criterion_5_eds_strong_connectivity():
    graphs = [a for a in nx.graph_atlas_g()
              if 0 < a.number_of_nodes() <= 6 and a.number_of_edges() and nx.is_connected(a)]
    failures = []
    for a in graphs:
        g = build_graph(a.number_of_nodes(), sorted(a.edges()))
        nodes = set(brute_minimal_sets(make_property("eds", g)))
        arcs = {s: all_minimal_neighbors(g, s) for s in nodes}
        if any(not ts <= nodes for ts in arcs.values()) or not strongly_connected(nodes, arcs):
            failures.append(sorted(a.edges()))
    record_criterion(5, not failures,
                     f"{len(graphs)} connected graphs on <= 6 vertices, {len(failures)} not strongly connected")
    assert not failures, failures[:3]


def dfs_paths(mg, limit):
    found = []

    def walk(v, seen, edges):
        if v == mg.t:
            found.append(tuple(sorted(edges)))
            return
        if len(edges) == limit:
            return
        for w, e in mg.incidence[v]:
            if w not in seen:
                walk(w, seen | {w}, edges + [e])

    walk(mg.s, {mg.s}, [])
    return found


def path_graphs():
    # every graph on <= 7 vertices up to isomorphism, plus random 8-vertex graphs
    for a in nx.graph_atlas_g():
        if a.number_of_nodes() >= 2:
            yield a.number_of_nodes(), sorted(a.edges())
    rng = random.Random(SEED + 3)
    for _ in range(150):
        g = random_graph(rng, 8, rng.randint(0, 20))
        yield 8, list(g.edges)


def test_criterion_6_path_enumerator():
    checked = 0
    failures = []
    for n, edges in path_graphs():
        for s, t in combinations(range(n), 2):
            mg = build_multigraph(n, edges, s=s, t=t)
            oracle = dfs_paths(mg, n - 1)
            for k in range(n):
                got = list(iter_st_paths(mg, k))
                lengths = [p.length for p in got]
                want = sorted(q for q in oracle if len(q) <= k)
                checked += 1
                if sorted(tuple(sorted(p.edges)) for p in got) != want or lengths != sorted(lengths):
                    failures.append((n, edges, s, t, k))
    record_criterion(6, not failures, f"{checked} (graph, s, t, k) cases, {len(failures)} mismatches")
    assert not failures, failures[:3]


def sfvd_control(n):
    """Star K(1, 2n) with centre 0 plus an edge inside each consecutive leaf pair."""
    pairs = [(0, i) for i in range(1, 2 * n + 1)]
    pairs += [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    g = build_graph(2 * n + 1, pairs)
    p = PropertyInstance("sfvd", g, "vertex", g.vertex_count,
                         star_forest_vertex_deletion_membership(g))
    return p, vs(0)


def eds_control(i):
    """x = ab, y0 = ac, y1 = cd; for each j: g_j = b p_j, z_j = p_j q_j, z'_j = p_j q'_j,
    h_j = q_j r_j, h'_j = q'_j r'_j. X holds x, y0 and every h and h'.

    Dropping x leaves every g_j undominated. A single g_j repairs all of them
    through b; otherwise one of z_j, z'_j is needed for each j independently,
    giving 2^i further minimal repairs.
    """
    names = ["a", "b", "c", "d"]
    for j in range(i):
        names += [f"p{j}", f"q{j}", f"q'{j}", f"r{j}", f"r'{j}"]
    at = {v: n for n, v in enumerate(names)}
    pairs = [("a", "b"), ("a", "c"), ("c", "d")]
    for j in range(i):
        pairs += [("b", f"p{j}"), (f"p{j}", f"q{j}"), (f"p{j}", f"q'{j}"),
                  (f"q{j}", f"r{j}"), (f"q'{j}", f"r'{j}")]
    g = build_graph(len(names), [(at[u], at[v]) for u, v in pairs])
    x_set = canonicalize([0, 1] + [3 + 5 * j + 3 for j in range(i)] + [3 + 5 * j + 4 for j in range(i)], EDGE)
    return make_property("eds", g), x_set, 0


def test_criterion_7_non_cks_controls():
    p, x_set = sfvd_control(5)
    assert is_minimal_pi_set(p, x_set)
    sfvd = brute_restricted_family(p, 10, x_set, 0)
    q, eds_x, x = eds_control(5)
    assert is_minimal_pi_set(q, eds_x)
    eds = brute_restricted_family(q, 5, eds_x, x)
    # neither property has a restricted solver to plug into the generic drivers
    assert q.restricted_solver is None and p.restricted_solver is None
    passed = len(sfvd) >= 32 and len(eds) >= 32
    record_criterion(7, passed, f"star forest vertex deletion family {len(sfvd)}, "
                     f"edge dominating set gadget family {len(eds)} (need >= 32 each)")
    assert passed


# alpha was calibrated once with scripts/calibrate_delay.py on seeds 0..4
# (largest observed ratio 0.034) and frozen at roughly three times that.
ALPHA = 0.1
DELAY_EMISSIONS = 300


def delay_instances():
    rng = random.Random(SEED + 4)
    for name in ("vc", "eds"):
        for _ in range(3):
            g = random_graph(rng, 50, rng.randint(60, 120))
            yield name, g


def test_criterion_8_delay_budget():
    worst = 0.0
    failures = []
    for name, g in delay_instances():
        p = make_property(name, g)
        k = 10 if name == "eds" else 30
        _, outcome = collect(p, k, force=True, max_solutions=DELAY_EMISSIONS)
        s = outcome.summary
        scale = g.vertex_count * g.edge_count * g.max_degree ** 2
        gap = max(s.max_gap_work, s.tail_work)
        worst = max(worst, gap / scale)
        if s.emitted < 2 or gap > ALPHA * scale:
            failures.append((name, g.edge_count, s.emitted, gap, ALPHA * scale))
    record_criterion(8, not failures, f"largest work/(n m D^2) = {worst:.4f}, alpha = {ALPHA}")
    assert not failures, failures


def test_criterion_9_both_cap_modes():
    strict, _ = strict_sweep()
    inclusive, seconds = inclusive_sweep()
    problems = {
        mode: len(t.incomplete) + len(t.oversized) + len(t.non_minimal) + len(t.duplicated)
        for mode, t in (("strict", strict), ("inclusive", inclusive))
    }
    record_criterion(9, not any(problems.values()),
                     f"criteria 1-3 failures: strict {problems['strict']}, "
                     f"inclusive {problems['inclusive']} ({seconds:.0f}s)")
    assert not any(problems.values())
