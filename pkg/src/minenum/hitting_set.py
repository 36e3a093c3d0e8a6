"""Approximate enumeration of minimal hitting sets of bounded-rank hypergraphs.

For a minimal hitting set ``X`` and ``x`` in ``X``, the restricted family is
the set of minimal hitting sets of the hypergraph obtained by dropping every
hyperedge already hit by ``X - {x}`` and deleting ``x`` from the rest. That
hypergraph has rank at most ``d - 1``, so it is enumerated by the same
procedure one rank lower. Rank 2 is vertex cover and uses the
polynomial-delay driver.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .engine import IncrementalTraversal, PolyDelayTraversal, SolutionRecord, Summary
from .model import VERTEX, ElementSet, Hypergraph, build_hypergraph, canonicalize
from .properties import (
    INCREMENTAL,
    POLY_DELAY,
    PropertyError,
    PropertyInstance,
    hitting_set_membership,
)
from .seeds import hs_seed


def hs_factor(d: int) -> Fraction:
    """Output factor at rank ``d``: 3 at rank 2, then ``d + f(d - 1) + 1``."""
    if d <= 1:
        return Fraction(1)
    if d == 2:
        return Fraction(3)
    return d + hs_factor(d - 1) + 1


@dataclass(frozen=True)
class ReducedInstance:
    hypergraph: Hypergraph
    lineage: tuple[ElementSet, int]
    # x was the only vertex of some hyperedge nothing else hits
    infeasible: bool = False


def reduce_instance(h: Hypergraph, x_set: ElementSet, x: int) -> ReducedInstance:
    if x not in x_set:
        raise PropertyError(f"{x} is not in the hitting set")
    rest = set(x_set.without(x))
    edges = []
    infeasible = False
    for e in h.hyperedges:
        if rest.intersection(e):
            continue
        trimmed = tuple(v for v in e if v != x)
        if not trimmed:
            infeasible = True
            continue
        edges.append(trimmed)
    reduced = Hypergraph(h.vertex_count, tuple(edges), max((len(e) for e in edges), default=0))
    return ReducedInstance(reduced, (x_set, x), infeasible)


def restricted_hs(h: Hypergraph, d: int, k: int, x_set: ElementSet, x: int) -> Iterator[ElementSet]:
    """Stream minimal Y with ``|Y| <= k`` completing ``X - {x}``.

    Singleton hyperedges force their vertex; the remainder is enumerated
    recursively at its own rank. The recursive enumeration is approximate,
    so its larger outputs are dropped here.
    """
    reduced = reduce_instance(h, x_set, x)
    if reduced.infeasible:
        return
    forced = sorted({e[0] for e in reduced.hypergraph.hyperedges if len(e) == 1})
    if len(forced) > k:
        return
    hit = set(forced)
    remaining = [e for e in reduced.hypergraph.hyperedges if not hit.intersection(e)]
    if not remaining:
        yield canonicalize(forced, VERTEX)
        return
    inner = build_hypergraph(h.vertex_count, remaining)
    budget = k - len(forced)
    for record in _iter_hs(inner, inner.rank, budget):
        if len(record.solution) <= budget:
            yield record.solution.union(forced)


def make_hs_property(h: Hypergraph, d: int | None = None) -> PropertyInstance:
    d = h.rank if d is None else d
    if max((len(e) for e in h.hyperedges), default=0) > d:
        raise PropertyError(f"hypergraph has a hyperedge larger than rank {d}")

    def restricted(p, k, x_set, x):
        return restricted_hs(h, d, k, x_set, x)

    return PropertyInstance(
        name="hs",
        ground=h,
        kind=VERTEX,
        universe=h.vertex_count,
        membership=hitting_set_membership(h),
        seed_strategy=lambda k: hs_seed(h, k),
        restricted_solver=restricted,
        seed_factor=Fraction(max(d, 1)),
        solver_factor=hs_factor(d - 1) if d >= 3 else Fraction(1),
        output_factor=hs_factor(d),
        driver=INCREMENTAL if d >= 3 else POLY_DELAY,
        params={"rank": d},
    )


def _traversal(p: PropertyInstance, k: int, seed: ElementSet, check: bool = False):
    if p.driver == POLY_DELAY:
        return PolyDelayTraversal(p, k, seed, check=check)
    return IncrementalTraversal(p, k, seed, check=check)


def _iter_hs(h: Hypergraph, d: int, k: int) -> Iterator[SolutionRecord]:
    p = make_hs_property(h, d)
    result = hs_seed(h, k)
    if not result.feasible:
        return
    yield from _traversal(p, k, result.seed)


def enumerate_hs(
    h: Hypergraph,
    d: int,
    k: int,
    emit: Callable[[SolutionRecord], None],
    *,
    max_solutions: int | None = None,
    check: bool = False,
) -> Summary:
    """Enumerate minimal hitting sets covering every one of size at most ``k``.

    Returns an empty summary when the seed approximation certifies that no
    hitting set of size ``k`` exists.
    """
    p = make_hs_property(h, d)
    result = hs_seed(h, k)
    if not result.feasible:
        return Summary(factor=p.output_factor)
    summary = _traversal(p, k, result.seed, check).run(emit, max_solutions)
    summary.factor = p.output_factor
    return summary
