"""Minimal edge dominating sets.

Edge dominating sets do not have a polynomial-size restricted family, so
instead of the generic drivers this module walks two explicit neighbour
relations between minimal solutions. For ``x = {u, v}`` in ``X``:

* type I replaces ``x`` by one edge at each endpoint (or one edge at the
  only endpoint with other edges) and minimalizes;
* type II replaces ``x`` by an edge ``e`` at ``u`` together with a minimal
  set ``W`` of edges avoiding ``v`` that re-dominates the edges at ``v``
  left undominated, then minimalizes.

Traversing neighbours of size at most ``5k`` from a maximal matching of size
at most ``2k`` reaches every minimal edge dominating set of size ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .engine import Summary, _Traversal, TraversalState
from .model import EDGE, ElementSet, Graph
from .properties import (
    EDS_DRIVER,
    PropertyError,
    PropertyInstance,
    comp,
    edge_dominating_set_membership,
)
from .seeds import eds_seed

TYPE_I = "I"
TYPE_II = "II"


@dataclass(frozen=True)
class EdsNeighborRequest:
    x: int
    pivot: int  # endpoint u of x that e is incident to
    e: int
    f: int | None = None
    variant: str = TYPE_I


def make_eds_property(g: Graph) -> PropertyInstance:
    return PropertyInstance(
        name="eds",
        ground=g,
        kind=EDGE,
        universe=g.edge_count,
        membership=edge_dominating_set_membership(g),
        seed_strategy=lambda k: eds_seed(g, k),
        restricted_solver=None,
        seed_factor=Fraction(2),
        output_factor=Fraction(5),
        driver=EDS_DRIVER,
    )


def private_edges(g: Graph, x_set: ElementSet) -> dict[int, list[int]]:
    """Edges dominated by ``x`` and by no other member of ``x_set``."""
    hits = [0] * g.vertex_count
    for e in x_set:
        for w in g.edges[e]:
            hits[w] += 1
    out = {}
    for x in x_set:
        a, b = g.edges[x]
        private = []
        for i, (p, q) in enumerate(g.edges):
            mine = (p in (a, b)) + (q in (a, b))
            if not mine:
                continue
            # occurrences of p/q among other members' endpoints
            others = sum(hits[w] - (w in (a, b)) for w in (p, q))
            if others == 0:
                private.append(i)
        out[x] = private
    return out


def _endpoints(g: Graph, edges) -> set[int]:
    return {w for e in edges for w in g.edges[e]}


def _split(g: Graph, x: int, pivot: int) -> tuple[int, int]:
    u, v = g.edges[x]
    if pivot == u:
        return u, v
    if pivot == v:
        return v, u
    raise PropertyError(f"vertex {pivot} is not an endpoint of edge {x}")


def _check_request(g: Graph, x_set: ElementSet, req: EdsNeighborRequest) -> tuple[int, int]:
    if req.x not in x_set:
        raise PropertyError(f"edge {req.x} is not in the solution")
    u, v = _split(g, req.x, req.pivot)
    if req.e == req.x or req.e not in g.incidence[u]:
        raise PropertyError(f"edge {req.e} is not in Gamma({u}) minus {req.x}")
    if req.variant == TYPE_I:
        others_v = [f for f in g.incidence[v] if f != req.x]
        if req.f is None:
            if others_v:
                raise PropertyError("degenerate type-I request needs Gamma(v) = {x}")
        elif req.f == req.x or req.f not in g.incidence[v]:
            raise PropertyError(f"edge {req.f} is not in Gamma({v}) minus {req.x}")
    elif req.variant != TYPE_II:
        raise PropertyError(f"unknown request variant {req.variant!r}")
    return u, v


def _property(g: Graph, p: PropertyInstance | None) -> PropertyInstance:
    return make_eds_property(g) if p is None else p


def type1_neighbor(
    g: Graph, x_set: ElementSet, req: EdsNeighborRequest, p: PropertyInstance | None = None
) -> ElementSet:
    _check_request(g, x_set, req)
    added = [req.e] if req.f is None else [req.e, req.f]
    return comp(_property(g, p), x_set.without(req.x).union(added))


def compute_w(g: Graph, x_set: ElementSet, x: int, pivot: int, e: int) -> list[int] | None:
    """Deterministic minimal ``W`` avoiding Gamma(v), or None if none exists.

    Candidates are the edges at the far end of each undominated edge at
    ``v``; they are pruned in ascending order while they still dominate.
    """
    u, v = _split(g, x, pivot)
    touched = _endpoints(g, list(x_set.without(x)) + [e])
    residue = [
        h for h in g.incidence[v]
        if h != x and not touched.intersection(g.edges[h])
    ]
    far = {h: g.other_end(h, v) for h in residue}
    pool: set[int] = set()
    for h in residue:
        options = [c for c in g.incidence[far[h]] if v not in g.edges[c]]
        if not options:
            return None
        pool.update(options)

    def dominates(w_edges) -> bool:
        ends = _endpoints(g, w_edges)
        return all(far[h] in ends for h in residue)

    w = sorted(pool)
    changed = True
    while changed:
        changed = False
        for c in list(w):
            trial = [h for h in w if h != c]
            if dominates(trial):
                w = trial
                changed = True
    if len(w) > len(g.incidence[v]):
        raise AssertionError(f"|W| = {len(w)} exceeds |Gamma(v)| = {len(g.incidence[v])}")
    return w


def type2_neighbor(
    g: Graph, x_set: ElementSet, req: EdsNeighborRequest, p: PropertyInstance | None = None
) -> ElementSet | None:
    _check_request(g, x_set, req)
    w = compute_w(g, x_set, req.x, req.pivot, req.e)
    if w is None:
        return None
    return comp(_property(g, p), x_set.without(req.x).union(w + [req.e]))


def iter_requests(g: Graph, x_set: ElementSet) -> Iterator[EdsNeighborRequest]:
    """Every well-formed request: x ascending, type I then type II."""
    for x in x_set:
        u, v = g.edges[x]
        at_u = [e for e in g.incidence[u] if e != x]
        at_v = [f for f in g.incidence[v] if f != x]
        if at_u and at_v:
            for e in at_u:
                for f in at_v:
                    yield EdsNeighborRequest(x, u, e, f)
        elif at_u:
            for e in at_u:
                yield EdsNeighborRequest(x, u, e)
        elif at_v:
            for e in at_v:
                yield EdsNeighborRequest(x, v, e)
        for pivot, edges in ((u, at_u), (v, at_v)):
            for e in edges:
                yield EdsNeighborRequest(x, pivot, e, variant=TYPE_II)


def iter_eds_neighbors(
    g: Graph, x_set: ElementSet, cap: int | None, p: PropertyInstance | None = None, counters=None
) -> Iterator[ElementSet]:
    p = _property(g, p)
    seen = {x_set}
    for req in iter_requests(g, x_set):
        if counters is not None:
            counters.solver += 1
        if req.variant == TYPE_I:
            z = type1_neighbor(g, x_set, req, p)
        else:
            z = type2_neighbor(g, x_set, req, p)
        if z is not None and counters is not None:
            counters.comp += 1
        if z is None or (cap is not None and len(z) > cap) or z in seen:
            continue
        seen.add(z)
        yield z


def eds_neighbors(
    g: Graph, x_set: ElementSet, cap: int | None, emit: Callable[[ElementSet], None] | None = None
) -> int:
    n = 0
    for z in iter_eds_neighbors(g, x_set, cap):
        if emit is not None:
            emit(z)
        n += 1
    return n


class EdsTraversal(_Traversal):
    """Breadth-first walk over type-I/II neighbours of size at most the cap.

    Sets are output when dequeued, so consecutive outputs are one neighbour
    expansion apart.
    """

    def __init__(self, g: Graph, k: int, seed: ElementSet, check: bool = False):
        super().__init__(make_eds_property(g), k, seed, check)
        self.g = g
        # |S| + 3k is 5k for a seed of size 2k
        self.cap = max(5 * k, len(seed) + 3 * k)
        self.state = TraversalState(k, len(seed), self.cap, self.cap, counters=self.counters)
        self.summary.size_bound = self.cap
        self.summary.factor = Fraction(self.cap, k) if k else None

    def __iter__(self):
        record = self._empty_set_rule()
        if record is not None:
            yield record
            self._finish()
            return
        state = self.state
        state.archive[self.seed] = None
        state.queue.append(self.seed)
        while state.queue:
            x_set = state.queue.popleft()
            yield self._out(x_set, state.archive[x_set])
            self.summary.expansions += 1
            for z in iter_eds_neighbors(self.g, x_set, self.cap, self.p, self.counters):
                state.admit(z, x_set)
        self._finish()


def enumerate_eds(
    g: Graph,
    k: int,
    emit,
    *,
    seed: ElementSet | None = None,
    max_solutions: int | None = None,
    check: bool = False,
) -> Summary:
    """Run the 5k-capped traversal from a maximal matching.

    Returns an empty summary if the matching has more than ``2k`` edges,
    which certifies that no edge dominating set of size ``k`` exists.
    """
    if seed is None:
        result = eds_seed(g, k)
        if not result.feasible:
            return Summary(factor=Fraction(5))
        seed = result.seed
    return EdsTraversal(g, k, seed, check).run(emit, max_solutions)


def all_minimal_neighbors(g: Graph, x_set: ElementSet) -> set[ElementSet]:
    """Uncapped neighbour set, used to test strong connectivity."""
    return set(iter_eds_neighbors(g, x_set, None))

