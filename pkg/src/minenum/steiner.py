"""Minimal Steiner subgraphs.

Removing one edge ``x`` from a Steiner tree ``T`` splits it into two
subtrees. The minimal ways to reconnect them without ``x`` are exactly the
paths between the two subtrees whose inner vertices lie outside both. After
contracting each subtree to a single vertex those are the simple ``s``-``t``
paths of a multigraph, enumerated here in nondecreasing length by a
deviation scheme (Lawler's) with a length cutoff instead of a count cutoff.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Callable, Iterator

from .model import EDGE, ElementSet, Graph, canonicalize
from .properties import INCREMENTAL, PropertyError, PropertyInstance, steiner_membership
from .seeds import bfs_tree, steiner_seed


@dataclass(frozen=True)
class ContractedMultigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    back_map: tuple[int, ...]
    s: int
    t: int
    # per vertex: (neighbour, edge index) pairs, ascending
    incidence: tuple[tuple[tuple[int, int], ...], ...]


def build_multigraph(
    vertex_count: int, edges, back_map=None, s: int = 0, t: int = 1
) -> ContractedMultigraph:
    """Multigraph from ``(a, b)`` pairs; self-loops are dropped."""
    kept, back = [], []
    for i, (a, b) in enumerate(edges):
        if a == b:
            continue
        kept.append((a, b))
        back.append(i if back_map is None else back_map[i])
    incidence: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for i, (a, b) in enumerate(kept):
        incidence[a].append((b, i))
        incidence[b].append((a, i))
    return ContractedMultigraph(
        vertex_count,
        tuple(kept),
        tuple(back),
        s,
        t,
        tuple(tuple(sorted(inc)) for inc in incidence),
    )


@dataclass(frozen=True)
class PathRecord:
    edges: tuple[int, ...]  # original edge ids, from s to t
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


def _shortest_path(mg: ContractedMultigraph, source: int, blocked, forbidden):
    """BFS path ``source`` -> ``t`` avoiding vertices and edges; None if none."""
    if source in blocked:
        return None
    parent: dict[int, tuple[int, int] | None] = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == mg.t:
            vertices, medges = [v], []
            while parent[v] is not None:
                prev, e = parent[v]
                medges.append(e)
                vertices.append(prev)
                v = prev
            return tuple(reversed(vertices)), tuple(reversed(medges))
        for w, e in mg.incidence[v]:
            if w in parent or w in blocked or e in forbidden:
                continue
            parent[w] = (v, e)
            queue.append(w)
    return None


def iter_st_paths(mg: ContractedMultigraph, k: int) -> Iterator[PathRecord]:
    """Every simple s-t path with at most ``k`` edges, once, shortest first.

    A pool entry ``(path, i, F)`` stands for all paths sharing the first
    ``i`` edges of ``path`` whose next edge is not in ``F``. Popping the
    shortest entry outputs its path and splits the rest of its subspace by
    the first position ``j > i`` where a path leaves it.
    """
    if mg.s == mg.t:
        raise ValueError("s and t must differ")
    first = _shortest_path(mg, mg.s, frozenset(), frozenset())
    if first is None or len(first[1]) > k:
        return
    tie = count()
    pool = [(len(first[1]), first[1], next(tie), first[0], 0, frozenset())]
    while pool:
        length, medges, _, vertices, fixed, forbidden = heapq.heappop(pool)
        yield PathRecord(tuple(mg.back_map[e] for e in medges), vertices)
        for j in range(fixed, length):
            # keep the first j edges, leave vertices[j] by another edge
            prefix_vertices = vertices[: j + 1]
            banned = forbidden | {medges[j]}
            q = _shortest_path(mg, vertices[j], frozenset(prefix_vertices[:-1]), banned)
            if q is None:
                continue
            new_length = j + len(q[1])
            if new_length > k:
                continue
            new_edges = medges[:j] + q[1]
            heapq.heappush(
                pool,
                (new_length, new_edges, next(tie), prefix_vertices[:-1] + q[0], j, banned),
            )


def k_bounded_st_paths(
    mg: ContractedMultigraph, k: int, emit: Callable[[PathRecord], None] | None = None
) -> int:
    n = 0
    for path in iter_st_paths(mg, k):
        if emit is not None:
            emit(path)
        n += 1
    return n


def split_tree(g: Graph, tree_edges: ElementSet, x: int) -> tuple[set[int], set[int]]:
    """Vertex sets of the two components of ``tree_edges - {x}``."""
    if x not in tree_edges:
        raise PropertyError(f"edge {x} is not in the tree")
    adj: dict[int, list[int]] = {}
    for e in tree_edges:
        a, b = g.edges[e]
        adj.setdefault(a, [])
        adj.setdefault(b, [])
        if e != x:
            adj[a].append(b)
            adj[b].append(a)

    def reach(start):
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    u, v = g.edges[x]
    side_u, side_v = reach(u), reach(v)
    if side_u & side_v or len(side_u) + len(side_v) != len(adj):
        raise PropertyError("tree_edges is not a tree")
    return side_u, side_v


def contract(g: Graph, tree_edges: ElementSet, x: int) -> ContractedMultigraph:
    side_s, side_t = split_tree(g, tree_edges, x)
    s, t = min(side_s), min(side_t)
    rep = {v: s for v in side_s}
    rep.update({v: t for v in side_t})
    edges, back = [], []
    for i, (a, b) in enumerate(g.edges):
        if i == x:
            continue
        edges.append((rep.get(a, a), rep.get(b, b)))
        back.append(i)
    return build_multigraph(g.vertex_count, edges, back, s, t)


def restricted_steiner(
    g: Graph, terminals, k: int, tree_edges: ElementSet, x: int
) -> Iterator[ElementSet]:
    """Stream the edge sets of paths reconnecting ``tree_edges - {x}``."""
    member = steiner_membership(g, tuple(sorted(set(terminals))))
    if member(tree_edges.without(x)):
        yield ElementSet((), EDGE)
        return
    mg = contract(g, tree_edges, x)
    seen = set()
    for path in iter_st_paths(mg, k):
        y = canonicalize(path.edges, EDGE)
        if y not in seen:
            seen.add(y)
            yield y


def make_steiner_property(g: Graph, terminals) -> PropertyInstance:
    terms = tuple(sorted(set(terminals)))
    if not terms:
        raise PropertyError("steiner needs at least one terminal")
    for t in terms:
        if not 0 <= t < g.vertex_count:
            raise PropertyError(f"terminal {t} out of range")
    dist, _ = bfs_tree(g, terms[0])
    if any(dist[t] < 0 for t in terms):
        raise PropertyError("terminals are not in one connected component")

    def restricted(p, k, x_set, x):
        return restricted_steiner(g, terms, k, x_set, x)

    return PropertyInstance(
        name="steiner",
        ground=g,
        kind=EDGE,
        universe=g.edge_count,
        membership=steiner_membership(g, terms),
        seed_strategy=lambda k: steiner_seed(g, terms, k),
        restricted_solver=restricted,
        seed_factor=Fraction(2),
        solver_factor=Fraction(1),
        output_factor=Fraction(4),
        driver=INCREMENTAL,
        params={"terminals": terms},
    )
