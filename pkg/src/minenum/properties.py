"""Monotone properties: membership oracles, greedy minimalization, minimality.

A :class:`PropertyInstance` bundles everything the traversal drivers need
for one concrete (ground set, property) pair. Instances are built by
:func:`minenum.registry.make_property`.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .model import ElementSet, Graph, Hypergraph, canonicalize

Membership = Callable[[ElementSet], bool]
# restricted(p, k, x_set, x) streams the family of minimal Y for (X, x)
RestrictedSolver = Callable[["PropertyInstance", int, ElementSet, int], Iterable[ElementSet]]

POLY_DELAY = "poly-delay"
INCREMENTAL = "incremental"
EDS_DRIVER = "eds"


class PropertyError(ValueError):
    pass


@dataclass(frozen=True)
class PropertyInstance:
    name: str
    ground: Graph | Hypergraph
    kind: str
    universe: int
    membership: Membership
    seed_strategy: Callable[[int], Any] | None = None
    restricted_solver: RestrictedSolver | None = None
    seed_factor: Fraction = Fraction(1)
    # approximation factor of the restricted enumerator (1 = exact)
    solver_factor: Fraction = Fraction(1)
    output_factor: Fraction = Fraction(1)
    driver: str = POLY_DELAY
    params: dict = field(default_factory=dict)

    def element_set(self, raw: Iterable[int]) -> ElementSet:
        return canonicalize(raw, self.kind)

    def full_set(self) -> ElementSet:
        return ElementSet(tuple(range(self.universe)), self.kind)

    def with_membership(self, membership: Membership) -> "PropertyInstance":
        return dataclasses.replace(self, membership=membership)


def _check_range(p: PropertyInstance, x: ElementSet) -> None:
    if x.elements and not (0 <= x.elements[0] and x.elements[-1] < p.universe):
        raise PropertyError(f"element out of range 0..{p.universe - 1}: {list(x.elements)}")


def is_pi_set(p: PropertyInstance, x: ElementSet) -> bool:
    _check_range(p, x)
    return p.membership(x)


def comp(p: PropertyInstance, x: ElementSet) -> ElementSet:
    """Greedy minimalization of a Pi-set in ascending element order."""
    if not is_pi_set(p, x):
        raise PropertyError(f"comp precondition: {list(x.elements)} is not a {p.name} set")
    return minimalize(p.membership, x)


def minimalize(membership: Membership, x: ElementSet) -> ElementSet:
    """One ascending pass removing every element that is not needed.

    A second pass would be a no-op: each kept element was necessary for a
    superset of the result, so by monotonicity it is necessary for the
    result too.
    """
    current = list(x.elements)
    for e in x.elements:
        trial = [f for f in current if f != e]
        if membership(ElementSet(tuple(trial), x.kind)):
            current = trial
    return ElementSet(tuple(current), x.kind)


def is_minimal_pi_set(p: PropertyInstance, x: ElementSet) -> bool:
    if not is_pi_set(p, x):
        return False
    return not any(p.membership(x.without(e)) for e in x)


# membership oracles -------------------------------------------------------

def vertex_cover_membership(g: Graph) -> Membership:
    def member(x: ElementSet) -> bool:
        s = x.as_set()
        return all(u in s or v in s for u, v in g.edges)
    return member


def bounded_degree_membership(g: Graph, d: int) -> Membership:
    """G[V \\ S] has maximum degree at most ``d``."""
    def member(x: ElementSet) -> bool:
        s = x.as_set()
        for v in g.vertices():
            if v in s or len(g.adjacency[v]) <= d:
                continue
            if sum(1 for w in g.adjacency[v] if w not in s) > d:
                return False
        return True
    return member


def is_star_forest_after(g: Graph, removed_edges: frozenset[int] | set[int]) -> bool:
    # a graph is a star forest iff every edge has an endpoint of degree one
    degree = [0] * g.vertex_count
    for i, (u, v) in enumerate(g.edges):
        if i not in removed_edges:
            degree[u] += 1
            degree[v] += 1
    return all(
        degree[u] == 1 or degree[v] == 1
        for i, (u, v) in enumerate(g.edges)
        if i not in removed_edges
    )


def star_forest_edge_deletion_membership(g: Graph) -> Membership:
    def member(x: ElementSet) -> bool:
        return is_star_forest_after(g, x.as_set())
    return member


def star_forest_vertex_deletion_membership(g: Graph) -> Membership:
    """G[V \\ S] is a star forest. Only used as a non-CKS control."""
    def member(x: ElementSet) -> bool:
        s = x.as_set()
        degree = [0] * g.vertex_count
        alive = [(u, v) for u, v in g.edges if u not in s and v not in s]
        for u, v in alive:
            degree[u] += 1
            degree[v] += 1
        return all(degree[u] == 1 or degree[v] == 1 for u, v in alive)
    return member


def dominating_set_membership(g: Graph) -> Membership:
    def member(x: ElementSet) -> bool:
        s = x.as_set()
        return all(v in s or any(w in s for w in g.adjacency[v]) for v in g.vertices())
    return member


def edge_dominating_set_membership(g: Graph) -> Membership:
    # X dominates every edge iff no two untouched vertices are adjacent
    ends = [(1 << u) | (1 << v) for u, v in g.edges]
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in g.vertices()]

    def member(x: ElementSet) -> bool:
        touched = 0
        for e in x:
            touched |= ends[e]
        for v in g.vertices():
            if not touched >> v & 1 and nbr[v] & ~touched:
                return False
        return True
    return member


def steiner_membership(g: Graph, terminals: tuple[int, ...]) -> Membership:
    """All terminals lie in one component of (V, F)."""
    def member(x: ElementSet) -> bool:
        if len(terminals) <= 1:
            return True
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                a = parent[a]
            return a

        for e in x:
            a, b = g.edges[e]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        root = find(terminals[0])
        return all(find(t) == root for t in terminals[1:])
    return member


def hitting_set_membership(h: Hypergraph) -> Membership:
    def member(x: ElementSet) -> bool:
        s = x.as_set()
        return all(any(v in s for v in e) for e in h.hyperedges)
    return member

