"""Graphs, hypergraphs and canonical element sets.

Vertices and edges are dense 0-based integers. An edge is identified by its
position in the input edge list, so solutions over edges are plain index
sets and replay is deterministic.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

VERTEX = "vertex"
EDGE = "edge"
KINDS = (VERTEX, EDGE)


class GraphError(ValueError):
    """Raised for malformed graph or hypergraph input."""


@dataclass(frozen=True, order=True)
class ElementSet:
    """A strictly ascending tuple of ground-set ids tagged with its kind."""

    elements: tuple[int, ...] = ()
    kind: str = VERTEX

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        i = bisect_left(self.elements, item)  # type: ignore[arg-type]
        return i < len(self.elements) and self.elements[i] == item

    def __repr__(self) -> str:
        return f"ElementSet({list(self.elements)}, {self.kind!r})"

    def without(self, item: int) -> "ElementSet":
        return ElementSet(tuple(e for e in self.elements if e != item), self.kind)

    def union(self, other: Iterable[int]) -> "ElementSet":
        return canonicalize(self.elements + tuple(other), self.kind)

    def difference(self, other: Iterable[int]) -> "ElementSet":
        drop = set(other)
        return ElementSet(tuple(e for e in self.elements if e not in drop), self.kind)

    def issubset(self, other: "ElementSet") -> bool:
        return set(self.elements).issubset(other.elements)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def canonicalize(raw: Iterable[int], kind: str = VERTEX) -> ElementSet:
    """Sort and deduplicate ``raw`` into an :class:`ElementSet`."""
    if kind not in KINDS:
        raise ValueError(f"unknown element kind {kind!r}")
    return ElementSet(tuple(sorted(set(raw))), kind)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency and incidence lists.

    ``incidence[v]`` lists the ids of edges incident to ``v`` in ascending
    order; ``adjacency[v]`` lists the neighbours of ``v`` in ascending order.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    def edge_id(self, u: int, v: int) -> int | None:
        if u > v:
            u, v = v, u
        for e in self.incidence[u]:
            if self.edges[e] == (u, v):
                return e
        return None

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted((v, *self.adjacency[v])))


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; rejects out-of-range ids, self-loops and duplicates."""
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for index, pair in enumerate(edge_list):
        if len(pair) != 2:
            raise GraphError(f"edge {index}: expected a pair, got {tuple(pair)}")
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise GraphError(f"edge {index}: vertex {w} out of range 0..{vertex_count - 1}")
        if u == v:
            raise GraphError(f"edge {index}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"edge {index}: duplicate of edge {seen[key]} {key}")
        seen[key] = index
        edges.append(key)

    adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
    incidence: list[list[int]] = [[] for _ in range(vertex_count)]
    for i, (u, v) in enumerate(edges):
        adjacency[u].append(v)
        adjacency[v].append(u)
        incidence[u].append(i)
        incidence[v].append(i)
    return Graph(
        vertex_count,
        tuple(edges),
        tuple(tuple(sorted(a)) for a in adjacency),
        tuple(tuple(inc) for inc in incidence),
    )


def delete_elements(g: Graph, removed: ElementSet) -> tuple[Graph, tuple[int, ...]]:
    """Delete vertices or edges from ``g``.

    Returns the reduced graph and a table mapping each new id back to the
    original id: vertex ids for vertex deletion (the induced subgraph is
    relabelled densely), edge ids for edge deletion (vertex ids are kept).
    """
    if removed.kind == VERTEX:
        for v in removed:
            if not 0 <= v < g.vertex_count:
                raise GraphError(f"vertex {v} out of range")
        gone = removed.as_set()
        keep = tuple(v for v in g.vertices() if v not in gone)
        new_id = {v: i for i, v in enumerate(keep)}
        pairs = [
            (new_id[u], new_id[v]) for u, v in g.edges if u not in gone and v not in gone
        ]
        return build_graph(len(keep), pairs), keep

    for e in removed:
        if not 0 <= e < g.edge_count:
            raise GraphError(f"edge {e} out of range")
    gone = removed.as_set()
    keep = tuple(i for i in range(g.edge_count) if i not in gone)
    return build_graph(g.vertex_count, [g.edges[i] for i in keep]), keep


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph whose hyperedges are strictly ascending vertex tuples."""

    vertex_count: int
    hyperedges: tuple[tuple[int, ...], ...]
    rank: int

    @property
    def edge_count(self) -> int:
        return len(self.hyperedges)


def build_hypergraph(
    vertex_count: int, hyperedges: Iterable[Iterable[int]], rank: int | None = None
) -> Hypergraph:
    """Build a hypergraph; ``rank`` defaults to the largest hyperedge size."""
    edges: list[tuple[int, ...]] = []
    for index, raw in enumerate(hyperedges):
        members = tuple(sorted(set(int(v) for v in raw)))
        if not members:
            raise GraphError(f"hyperedge {index}: empty")
        for v in members:
            if not 0 <= v < vertex_count:
                raise GraphError(f"hyperedge {index}: vertex {v} out of range")
        edges.append(members)
    actual = max((len(e) for e in edges), default=0)
    if rank is None:
        rank = actual
    elif actual > rank:
        raise GraphError(f"hyperedge of size {actual} exceeds rank {rank}")
    return Hypergraph(vertex_count, tuple(edges), rank)


def graph_as_hypergraph(g: Graph) -> Hypergraph:
    return build_hypergraph(g.vertex_count, g.edges, rank=2)
