import pytest

from minenum.eds import (
    TYPE_II,
    EdsNeighborRequest,
    all_minimal_neighbors,
    compute_w,
    eds_neighbors,
    enumerate_eds,
    iter_requests,
    private_edges,
    type1_neighbor,
    type2_neighbor,
)
from minenum.model import build_graph
from minenum.oracle import audit_run, brute_minimal_sets
from minenum.properties import PropertyError
from minenum.registry import make_property

from helpers import complete, cycle, es, path, random_graphs

# a - u - v - w - y with x = {u, v}
FIVE = path(5)


def emitted(g, k, **kw):
    out = []
    summary = enumerate_eds(g, k, out.append, **kw)
    return [r.solution for r in out], summary


def test_private_edges():
    assert private_edges(FIVE, es(1, 3)) == {1: [0, 1], 3: [3]}
    assert private_edges(path(4), es(0, 2)) == {0: [0], 2: [2]}


def test_type1_examples():
    assert type1_neighbor(path(4), es(1), EdsNeighborRequest(1, 1, 0, 2)) == es(0, 2)
    # vertex 0 is a leaf, so only the edge at vertex 1 is added
    assert type1_neighbor(path(3), es(0), EdsNeighborRequest(0, 1, 1)) == es(1)


@pytest.mark.parametrize("req", [
    EdsNeighborRequest(1, 1, 1, 2),      # e = x
    EdsNeighborRequest(0, 1, 1, 2),      # x not in X
    EdsNeighborRequest(1, 3, 2, 0),      # pivot not an endpoint
    EdsNeighborRequest(1, 1, 0),         # degenerate but v has other edges
    EdsNeighborRequest(1, 1, 0, 0),      # f not at v
])
def test_type1_rejects(req):
    with pytest.raises(PropertyError):
        type1_neighbor(path(4), es(1), req)


def test_type2_examples():
    req = EdsNeighborRequest(1, 1, 0, variant=TYPE_II)
    assert compute_w(FIVE, es(1, 3), 1, 1, 0) == []
    assert type2_neighbor(FIVE, es(1, 3), req) == es(0, 3)
    # the far end of {v, w} has no edge outside Gamma(v)
    assert compute_w(path(4), es(1), 1, 1, 0) is None
    assert type2_neighbor(path(4), es(1), req) is None


def test_type2_builds_w():
    # 0-1, 1-2 (x), 2-3, 3-4, 2-5, 5-6: removing x leaves 2-3 and 2-5 undominated
    g = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    w = compute_w(g, es(1), 1, 1, 0)
    assert w == [3, 5]
    z = type2_neighbor(g, es(1), EdsNeighborRequest(1, 1, 0, variant=TYPE_II))
    assert z == es(0, 3, 5)


def test_neighbors_examples():
    found = []
    eds_neighbors(path(4), es(0, 2), 5, found.append)
    assert es(1) in found
    assert eds_neighbors(path(2), es(0), 5) == 0
    assert eds_neighbors(path(4), es(0, 2), 0) == 0


def test_requests_order():
    reqs = list(iter_requests(path(4), es(1)))
    assert reqs[0] == EdsNeighborRequest(1, 1, 0, 2)
    assert {r.variant for r in reqs} == {"I", "II"}


def test_enumerate_examples():
    got, summary = emitted(path(4), 1)
    assert sorted(got) == [es(0, 2), es(1)]
    assert summary.factor == 5
    assert emitted(build_graph(3, []), 2)[0] == [es()]
    assert sorted(emitted(complete(3), 1)[0]) == [es(0), es(1), es(2)]


def test_enumerate_infeasible():
    got, summary = emitted(path(6), 0)
    assert got == [] and summary.emitted == 0


def test_cap_follows_forced_seed():
    g = cycle(6)
    got, summary = emitted(g, 1, seed=es(0, 2, 4))
    assert summary.size_bound == 6
    assert got[0] == es(0, 2, 4)


def test_audit_small_graphs():
    for g in random_graphs(21, 60, 6):
        p = make_property("eds", g)
        truth = brute_minimal_sets(p)
        for k in range(1, g.edge_count + 1):
            got, summary = emitted(g, k, check=True)
            if summary.emitted == 0:
                assert all(len(s) > k for s in truth)
                continue
            assert audit_run(p, k, 5, got, truth).ok


def test_neighbors_are_minimal_and_strongly_connected_c5():
    g = cycle(5)
    p = make_property("eds", g)
    nodes = set(brute_minimal_sets(p))
    arcs = {s: all_minimal_neighbors(g, s) for s in nodes}
    assert all(t in nodes for ts in arcs.values() for t in ts)
    start = min(nodes)
    seen, stack = {start}, [start]
    while stack:
        for t in arcs[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    assert seen == nodes
