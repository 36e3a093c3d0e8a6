"""Polynomial-time seed constructors.

Each constructor runs an approximation algorithm with a known factor ``c``.
If the raw approximate solution has more than ``c * k`` elements, no
solution of size ``k`` exists and an infeasibility certificate is returned;
otherwise the raw solution is greedily minimalized into the seed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .model import EDGE, VERTEX, ElementSet, Graph, Hypergraph, canonicalize
from .properties import (
    Membership,
    bounded_degree_membership,
    dominating_set_membership,
    hitting_set_membership,
    minimalize,
    star_forest_edge_deletion_membership,
    steiner_membership,
    vertex_cover_membership,
)


@dataclass(frozen=True)
class SeedResult:
    seed: ElementSet | None
    raw: ElementSet | None
    factor: Fraction
    budget: int
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.seed is not None

    def certificate(self) -> str:
        if self.feasible:
            return ""
        if self.raw is None:
            return self.reason
        return (
            f"approximate solution has {len(self.raw)} elements > "
            f"{self.factor} * {self.budget}; no solution of size <= {self.budget} exists"
        )


def _finish(raw: ElementSet, membership: Membership, factor: Fraction, k: int) -> SeedResult:
    if len(raw) > factor * k:
        return SeedResult(None, raw, factor, k)
    return SeedResult(minimalize(membership, raw), raw, factor, k)


def greedy_matching(g: Graph) -> list[int]:
    """Maximal matching picking edges in ascending id order."""
    used = [False] * g.vertex_count
    matching = []
    for i, (u, v) in enumerate(g.edges):
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            matching.append(i)
    return matching


def vc_seed(g: Graph, k: int) -> SeedResult:
    endpoints = [w for e in greedy_matching(g) for w in g.edges[e]]
    return _finish(canonicalize(endpoints, VERTEX), vertex_cover_membership(g), Fraction(2), k)


def eds_seed(g: Graph, k: int) -> SeedResult:
    # a maximal matching is already a minimal edge dominating set
    matching = canonicalize(greedy_matching(g), EDGE)
    if len(matching) > 2 * k:
        return SeedResult(None, matching, Fraction(2), k)
    return SeedResult(matching, matching, Fraction(2), k)


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def ds_seed(g: Graph, k: int) -> SeedResult:
    factor = harmonic(g.max_degree + 1)
    undominated = set(g.vertices())
    chosen = []
    while undominated:
        best, gain = -1, 0
        for v in g.vertices():
            c = sum(1 for w in g.closed_neighborhood(v) if w in undominated)
            if c > gain:
                best, gain = v, c
        chosen.append(best)
        undominated.difference_update(g.closed_neighborhood(best))
    return _finish(canonicalize(chosen, VERTEX), dominating_set_membership(g), factor, k)


def _smallest_obstruction(g: Graph, deleted: set[int]) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle or 3-edge path, as sorted edge ids."""
    best = None
    for mid, (a, b) in enumerate(g.edges):
        if mid in deleted:
            continue
        left = [e for e in g.incidence[a] if e != mid and e not in deleted]
        right = [e for e in g.incidence[b] if e != mid and e not in deleted]
        for e1 in left:
            for e3 in right:
                if e1 == e3:
                    continue
                candidate = tuple(sorted((e1, mid, e3)))
                if best is None or candidate < best:
                    best = candidate
    return best


def sfed_seed(g: Graph, k: int) -> SeedResult:
    """Local ratio over the two minimal non-star-forest patterns.

    Every triangle and every path with three edges needs at least one
    deleted edge; deleting all three edges of edge-disjoint patterns gives
    factor 3.
    """
    deleted: set[int] = set()
    while (obstruction := _smallest_obstruction(g, deleted)) is not None:
        deleted.update(obstruction)
    raw = canonicalize(deleted, EDGE)
    return _finish(raw, star_forest_edge_deletion_membership(g), Fraction(3), k)


def bdd_seed(g: Graph, d: int, k: int) -> SeedResult:
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    removed: set[int] = set()

    def alive_neighbors(v):
        return [w for w in g.adjacency[v] if w not in removed]

    while True:
        violator = next(
            (v for v in g.vertices() if v not in removed and len(alive_neighbors(v)) > d),
            None,
        )
        if violator is None:
            break
        removed.add(violator)
        removed.update(alive_neighbors(violator)[: d + 1])
    raw = canonicalize(removed, VERTEX)
    return _finish(raw, bounded_degree_membership(g, d), Fraction(d + 2), k)


def hs_seed(h: Hypergraph, k: int) -> SeedResult:
    factor = Fraction(max(h.rank, 1))
    chosen: set[int] = set()
    for e in h.hyperedges:
        if not chosen.intersection(e):
            chosen.update(e)
    return _finish(canonicalize(chosen, VERTEX), hitting_set_membership(h), factor, k)


def bfs_tree(g: Graph, source: int) -> tuple[list[int], list[int]]:
    """Distances and parent edges of a BFS from ``source`` (-1 if unreached)."""
    dist = [-1] * g.vertex_count
    parent_edge = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for e in g.incidence[v]:
            w = g.other_end(e, v)
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent_edge[w] = e
                queue.append(w)
    return dist, parent_edge


def steiner_seed(g: Graph, terminals, k: int) -> SeedResult:
    """Metric-closure MST heuristic (factor 2)."""
    factor = Fraction(2)
    terms = sorted(set(terminals))
    if len(terms) <= 1:
        return SeedResult(ElementSet((), EDGE), ElementSet((), EDGE), factor, k)
    trees = {t: bfs_tree(g, t) for t in terms}
    root_dist = trees[terms[0]][0]
    if any(root_dist[t] < 0 for t in terms):
        return SeedResult(None, None, factor, k, reason="terminals are not connected")

    # Prim on the terminal closure, ties by (distance, terminal id)
    in_tree = {terms[0]}
    edges: set[int] = set()
    while len(in_tree) < len(terms):
        _, a, b = min(
            (trees[a][0][b], a, b) for a in sorted(in_tree) for b in terms if b not in in_tree
        )
        parent_edge = trees[a][1]
        v = b
        while v != a:
            e = parent_edge[v]
            edges.add(e)
            v = g.other_end(e, v)
        in_tree.add(b)
    raw = canonicalize(edges, EDGE)
    return _finish(raw, steiner_membership(g, tuple(terms)), factor, k)
