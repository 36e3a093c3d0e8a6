"""Exact input-restricted solvers for vertex cover, bounded-degree deletion,
star-forest edge deletion and dominating set in bounded-degree graphs.

Every solver answers the same question: given a minimal solution ``X`` and
``x`` in ``X``, list all minimal ``Y`` avoiding ``x`` with ``|Y| <= k`` such
that ``(X - {x}) | Y`` is again a solution. Families are returned as
lexicographically sorted lists of distinct :class:`ElementSet`.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from .model import EDGE, VERTEX, ElementSet, Graph, canonicalize
from .properties import (
    PropertyError,
    bounded_degree_membership,
    dominating_set_membership,
    is_star_forest_after,
)


def _require_member(x_set: ElementSet, x: int) -> None:
    if x not in x_set:
        raise PropertyError(f"{x} is not in the solution {list(x_set.elements)}")


def minimal_family(
    candidates: Iterable[Iterable[int]],
    kind: str,
    k: int,
    feasible: Callable[[frozenset[int]], bool],
    forbidden: int,
) -> list[ElementSet]:
    """Keep feasible, inclusion-minimal candidates of size at most ``k``."""
    pool = set()
    for raw in candidates:
        y = frozenset(raw)
        if forbidden in y or len(y) > k or not feasible(y):
            continue
        pool.add(y)
    kept = []
    for y in pool:
        if any(other < y for other in pool):
            continue
        # recheck against the property itself, not just the pool
        if any(feasible(y - {e}) for e in y):
            continue
        kept.append(canonicalize(y, kind))
    return sorted(kept)


def restricted_vc(g: Graph, k: int, x_set: ElementSet, x: int) -> list[ElementSet]:
    _require_member(x_set, x)
    # X - {x} leaves uncovered exactly the edges {x, w} with w outside X
    forced = [w for w in g.adjacency[x] if w not in x_set]
    if len(forced) > k:
        return []
    return [canonicalize(forced, VERTEX)]


def restricted_bdd(g: Graph, d: int, k: int, x_set: ElementSet, x: int) -> list[ElementSet]:
    """Choose which at most ``d`` neighbours of ``x`` survive, then repair
    each surviving neighbour that is still over the bound by deleting one of
    its other neighbours."""
    _require_member(x_set, x)
    base = set(x_set.without(x))
    member = bounded_degree_membership(g, d)

    def feasible(y: frozenset[int]) -> bool:
        return member(canonicalize(base | y, VERTEX))

    if feasible(frozenset()):
        return [ElementSet((), VERTEX)]

    def alive_degree(v, deleted):
        return sum(1 for w in g.adjacency[v] if w not in base and w not in deleted)

    neighbours = [w for w in g.adjacency[x] if w not in base]
    candidates: list[frozenset[int]] = []

    def repair(survivors: frozenset[int], deleted: frozenset[int]) -> None:
        violator = next(
            (
                v
                for v in g.vertices()
                if v not in base and v not in deleted and alive_degree(v, deleted) > d
            ),
            None,
        )
        if violator is None:
            candidates.append(deleted)
            return
        if len(deleted) >= k:
            return
        keep = survivors | {x}
        options = [violator] if violator not in keep else []
        options += [
            w for w in g.adjacency[violator]
            if w not in base and w not in deleted and w not in keep
        ]
        for w in options:
            repair(survivors, deleted | {w})

    for size in range(min(d, len(neighbours)) + 1):
        for survivors in combinations(neighbours, size):
            removed = frozenset(neighbours) - set(survivors)
            if len(removed) <= k:
                repair(frozenset(survivors), removed)
    return minimal_family(candidates, VERTEX, k, feasible, x)


def restricted_sfed(g: Graph, k: int, x_set: ElementSet, x: int) -> list[ElementSet]:
    """Candidates from the leaf/centre roles of the endpoints of ``x``.

    ``x = {u, v}`` must survive in a star. Either both endpoints are leaves
    (every other edge at ``u`` and ``v`` goes), or one endpoint is the centre:
    the other endpoint loses its other edges, and every other neighbour of
    the centre loses all edges except the one to the centre. Both endpoints
    cannot be centres of the same star.
    """
    _require_member(x_set, x)
    base = set(x_set.without(x))

    def feasible(y: frozenset[int]) -> bool:
        return is_star_forest_after(g, base | y)

    if feasible(frozenset()):
        return [ElementSet((), EDGE)]

    def gamma(w):
        return [e for e in g.incidence[w] if e not in base]

    u, v = g.edges[x]
    both_leaves = {e for e in gamma(u) + gamma(v) if e != x}
    candidates = [both_leaves]
    for centre, leaf in ((u, v), (v, u)):
        y = {e for e in gamma(leaf) if e != x}
        for e in gamma(centre):
            if e == x:
                continue
            w = g.other_end(e, centre)
            y.update(f for f in gamma(w) if f != e)
        candidates.append(y)
    return minimal_family(candidates, EDGE, k, feasible, x)


def restricted_ds(g: Graph, k: int, x_set: ElementSet, x: int) -> list[ElementSet]:
    """Minimal ways to re-dominate the vertices only ``x`` dominated."""
    _require_member(x_set, x)
    base = set(x_set.without(x))
    member = dominating_set_membership(g)

    def feasible(y: frozenset[int]) -> bool:
        return member(canonicalize(base | y, VERTEX))

    lost = [
        p for p in g.closed_neighborhood(x)
        if p not in base and not any(w in base for w in g.adjacency[p])
    ]
    choices = {p: [w for w in g.closed_neighborhood(p) if w != x] for p in lost}
    if any(not c for c in choices.values()):
        return []

    candidates: list[frozenset[int]] = []

    def branch(chosen: frozenset[int]) -> None:
        open_vertex = next(
            (p for p in lost if not any(w in chosen for w in choices[p])), None
        )
        if open_vertex is None:
            candidates.append(chosen)
            return
        if len(chosen) >= k:
            return
        for w in choices[open_vertex]:
            branch(chosen | {w})

    branch(frozenset())
    return minimal_family(candidates, VERTEX, k, feasible, x)


def ds_tuple_bound(g: Graph) -> int:
    """Worst-case number of dominator tuples explored by :func:`restricted_ds`."""
    delta = g.max_degree
    return (delta + 1) ** (delta + 1)
