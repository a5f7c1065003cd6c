"""Input coercion for the public API and the estimators.

Accepted graph inputs: Graph, BipartiteGraph, a networkx graph with integer
nodes ``0..n-1``, a square 0/1 adjacency matrix, or a ``(n, edges)`` pair.
"""
from __future__ import annotations

from numbers import Integral

import numpy as np

from .exceptions import GraphError
from .graph import BipartiteGraph, Graph, bipartite_graph, bipartition, build_graph


def check_graph(X) -> Graph:
    if isinstance(X, Graph):
        return X
    if isinstance(X, BipartiteGraph):
        return X.g
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes())
        if nodes != list(range(len(nodes))):
            raise GraphError("networkx graph nodes must be 0..n-1")
        return build_graph(len(nodes), [(u, v) for u, v in X.edges()])
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], Integral):
        return build_graph(int(X[0]), X[1])
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GraphError(f"expected a square adjacency matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise GraphError("adjacency matrix is not symmetric")
    if np.any(np.diag(arr)):
        raise GraphError("adjacency matrix has a nonzero diagonal (loop)")
    n = arr.shape[0]
    rows, cols = np.nonzero(np.triu(arr, 1))
    return build_graph(n, zip(rows.tolist(), cols.tolist()))


def check_bipartite_graph(X, side_a=None) -> BipartiteGraph:
    """Coerce to a BipartiteGraph; without explicit sides the canonical
    2-colouring is used (raises NotBipartiteError with an odd cycle)."""
    if isinstance(X, BipartiteGraph) and side_a is None:
        return X
    g = check_graph(X)
    if side_a is not None:
        return bipartite_graph(g.n, g.edges(), side_a)
    return bipartition(g)


def check_count(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_pairs(pairs, n: int) -> np.ndarray:
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (m, 2) array of vertex pairs, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"vertex index out of range for n={n}")
    return arr
