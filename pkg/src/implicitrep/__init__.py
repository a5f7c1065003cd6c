"""Implicit (adjacency-labeling) representations of bipartite graph classes,
with exact small-scale checks of the structural facts behind them."""

__version__ = "0.1.0"

from .exceptions import (  # noqa: E402
    CodeError,
    DecodeError,
    DecompositionError,
    GraphError,
    ImplicitRepError,
    NotBipartiteError,
    NotInClassError,
    SchemeInvariantError,
)
from .families import class_spec, make, member, sample_in_class  # noqa: E402
from .graph import BipartiteGraph, Graph, bipartite_graph, bipartition, build_graph  # noqa: E402
from .io import read_graph, write_graph  # noqa: E402
from .labeling import Labeling, get_scheme, verify_labeling  # noqa: E402
from .estimators import ImplicitLabeler  # noqa: E402

__all__ = [
    "__version__", "Graph", "BipartiteGraph", "build_graph", "bipartite_graph", "bipartition", "class_spec",
    "make", "member", "sample_in_class", "read_graph", "write_graph", "Labeling", "get_scheme",
    "verify_labeling", "ImplicitLabeler", "ImplicitRepError", "GraphError", "NotBipartiteError",
    "NotInClassError", "SchemeInvariantError", "DecompositionError", "DecodeError", "CodeError",
]
