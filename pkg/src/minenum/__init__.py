"""Approximate enumeration of minimal solutions under a size budget."""
from .model import EDGE, VERTEX, ElementSet, Graph, Hypergraph, build_graph, build_hypergraph, canonicalize
from .properties import PropertyInstance, comp, is_minimal_pi_set, is_pi_set
from .registry import PROPERTIES, make_property
from .runner import collect, run_enumeration

__version__ = "0.1.0"

__all__ = [
    "EDGE",
    "VERTEX",
    "ElementSet",
    "Graph",
    "Hypergraph",
    "PROPERTIES",
    "PropertyInstance",
    "build_graph",
    "build_hypergraph",
    "canonicalize",
    "collect",
    "comp",
    "is_minimal_pi_set",
    "is_pi_set",
    "make_property",
    "run_enumeration",
]
