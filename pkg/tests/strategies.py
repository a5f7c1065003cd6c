"""Hypothesis strategies for small graphs."""
from hypothesis import strategies as st

from implicitrep.graph import bipartite_graph, build_graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw, min_n=0, max_n=10, density=None):
    n = draw(st.integers(min_n, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and draw(st.booleans()):
                edges.append((u, v))
    return bipartite_graph(n, edges, [v for v in range(n) if side[v]])
