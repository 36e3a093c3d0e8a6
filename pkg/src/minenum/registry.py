"""Property names -> configured :class:`PropertyInstance`."""
from __future__ import annotations

from fractions import Fraction

from . import cks, seeds
from .eds import make_eds_property
from .hitting_set import make_hs_property
from .model import EDGE, VERTEX, Graph, Hypergraph, graph_as_hypergraph
from .properties import (
    POLY_DELAY,
    PropertyError,
    PropertyInstance,
    bounded_degree_membership,
    dominating_set_membership,
    star_forest_edge_deletion_membership,
    vertex_cover_membership,
)
from .steiner import make_steiner_property

PROPERTIES = ("vc", "bdd", "sfed", "ds", "eds", "steiner", "hs")


def _graph(ground, name) -> Graph:
    if not isinstance(ground, Graph):
        raise PropertyError(f"property {name} needs a graph, not a hypergraph")
    return ground


def make_vc_property(g: Graph) -> PropertyInstance:
    return PropertyInstance(
        name="vc",
        ground=g,
        kind=VERTEX,
        universe=g.vertex_count,
        membership=vertex_cover_membership(g),
        seed_strategy=lambda k: seeds.vc_seed(g, k),
        restricted_solver=lambda p, k, x_set, x: cks.restricted_vc(g, k, x_set, x),
        seed_factor=Fraction(2),
        output_factor=Fraction(3),
        driver=POLY_DELAY,
    )


def make_bdd_property(g: Graph, d: int) -> PropertyInstance:
    if d is None or d < 0:
        raise PropertyError("bdd needs a non-negative --degree-bound")
    return PropertyInstance(
        name="bdd",
        ground=g,
        kind=VERTEX,
        universe=g.vertex_count,
        membership=bounded_degree_membership(g, d),
        seed_strategy=lambda k: seeds.bdd_seed(g, d, k),
        restricted_solver=lambda p, k, x_set, x: cks.restricted_bdd(g, d, k, x_set, x),
        seed_factor=Fraction(d + 2),
        output_factor=Fraction(d + 3),
        driver=POLY_DELAY,
        params={"degree_bound": d},
    )


def make_sfed_property(g: Graph) -> PropertyInstance:
    return PropertyInstance(
        name="sfed",
        ground=g,
        kind=EDGE,
        universe=g.edge_count,
        membership=star_forest_edge_deletion_membership(g),
        seed_strategy=lambda k: seeds.sfed_seed(g, k),
        restricted_solver=lambda p, k, x_set, x: cks.restricted_sfed(g, k, x_set, x),
        seed_factor=Fraction(3),
        output_factor=Fraction(4),
        driver=POLY_DELAY,
    )


def make_ds_property(g: Graph) -> PropertyInstance:
    c = seeds.harmonic(g.max_degree + 1)
    return PropertyInstance(
        name="ds",
        ground=g,
        kind=VERTEX,
        universe=g.vertex_count,
        membership=dominating_set_membership(g),
        seed_strategy=lambda k: seeds.ds_seed(g, k),
        restricted_solver=lambda p, k, x_set, x: cks.restricted_ds(g, k, x_set, x),
        seed_factor=c,
        output_factor=c + 1,
        driver=POLY_DELAY,
        params={"max_degree": g.max_degree},
    )


def make_property(
    name: str,
    ground: Graph | Hypergraph,
    *,
    degree_bound: int | None = None,
    rank: int | None = None,
    terminals=None,
) -> PropertyInstance:
    if name == "vc":
        return make_vc_property(_graph(ground, name))
    if name == "bdd":
        return make_bdd_property(_graph(ground, name), degree_bound)
    if name == "sfed":
        return make_sfed_property(_graph(ground, name))
    if name == "ds":
        return make_ds_property(_graph(ground, name))
    if name == "eds":
        return make_eds_property(_graph(ground, name))
    if name == "steiner":
        if not terminals:
            raise PropertyError("steiner needs terminals")
        return make_steiner_property(_graph(ground, name), terminals)
    if name == "hs":
        h = graph_as_hypergraph(ground) if isinstance(ground, Graph) else ground
        return make_hs_property(h, rank if rank is not None else h.rank)
    raise PropertyError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}")
