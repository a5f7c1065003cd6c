"""Immutable simple graphs stored as adjacency bitsets.

Vertices are ``0..n-1``.  ``adj[v]`` is a Python int whose bit ``u`` is set
iff ``u`` and ``v`` are adjacent.  Vertex sets are passed around as bitmasks
internally; public helpers also accept iterables of vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import GraphError, NotBipartiteError


def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    @property
    def vertices_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int, within: int | None = None) -> int:
        if within is None:
            return self.adj[v].bit_count()
        return (self.adj[v] & within).bit_count()

    def codegree(self, v: int) -> int:
        return self.n - 1 - self.degree(v)

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def induced(self, vertices: Sequence[int] | int) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes vertex ``i``.

        A bitmask argument is expanded in increasing vertex order.
        """
        if isinstance(vertices, int):
            vertices = bits_list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        sel = mask_of(vertices)
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v] & sel):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def complement(self) -> "Graph":
        full = self.vertices_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(a << shift for a in other.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a fixed bipartition ``side_a``/``side_b`` (bitmasks)."""

    g: Graph
    side_a: int
    side_b: int

    def __post_init__(self):
        full = self.g.vertices_mask
        if self.side_a & self.side_b or (self.side_a | self.side_b) != full:
            raise GraphError("sides must partition the vertex set")
        for v in iter_bits(self.side_a):
            if self.g.adj[v] & self.side_a:
                raise GraphError(f"edge inside side A at vertex {v}", position=v)
        for v in iter_bits(self.side_b):
            if self.g.adj[v] & self.side_b:
                raise GraphError(f"edge inside side B at vertex {v}", position=v)

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def adj(self) -> tuple:
        return self.g.adj

    @property
    def vertices_mask(self) -> int:
        return self.g.vertices_mask

    @property
    def edge_count(self) -> int:
        return self.g.edge_count

    def degree(self, v: int, within: int | None = None) -> int:
        return self.g.degree(v, within)

    def degrees(self) -> list[int]:
        return self.g.degrees()

    def neighbors(self, v: int) -> list[int]:
        return self.g.neighbors(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.g.has_edge(u, v)

    def side(self, v: int) -> int:
        """0 for side A, 1 for side B."""
        return 0 if self.side_a >> v & 1 else 1

    def opposite(self, v: int) -> int:
        return self.side_b if self.side_a >> v & 1 else self.side_a

    def bi_codegree(self, v: int, within: int | None = None) -> int:
        opp = self.opposite(v)
        if within is not None:
            opp &= within
        return (opp & ~self.g.adj[v]).bit_count()

    def swap(self) -> "BipartiteGraph":
        return BipartiteGraph(self.g, self.side_b, self.side_a)

    def induced(self, vertices: Sequence[int] | int) -> "BipartiteGraph":
        if isinstance(vertices, int):
            vertices = bits_list(vertices)
        sub = self.g.induced(vertices)
        a = mask_of(i for i, v in enumerate(vertices) if self.side_a >> v & 1)
        return BipartiteGraph(sub, a, sub.vertices_mask & ~a)

    def edges(self):
        return self.g.edges()

    def __repr__(self):
        return f"BipartiteGraph(A={bits_list(self.side_a)}, B={bits_list(self.side_b)}, edges={self.g.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pos, e in enumerate(edges):
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"out-of-range vertex in pair ({u},{v}) at position {pos}", position=pos)
        if u == v:
            raise GraphError(f"loop at vertex {u} at position {pos}", position=pos)
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate pair ({u},{v}) at position {pos}", position=pos)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def bipartite_graph(n: int, edges, side_a: Iterable[int]) -> BipartiteGraph:
    g = build_graph(n, edges)
    a = mask_of(side_a)
    return BipartiteGraph(g, a, g.vertices_mask & ~a)


def bipartition(g: Graph) -> BipartiteGraph:
    """Canonical 2-colouring: in each component the side holding the
    lowest-indexed vertex is side A.  Raises NotBipartiteError with an odd
    cycle otherwise."""
    if isinstance(g, BipartiteGraph):
        return g
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in iter_bits(g.adj[x]):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    raise NotBipartiteError(_odd_cycle(x, y, parent, depth))
    a = mask_of(v for v in range(g.n) if color[v] == 0)
    return BipartiteGraph(g, a, g.vertices_mask & ~a)


def _odd_cycle(x, y, parent, depth):
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartiteError:
        return False
    return True


def bipartite_complement(bg: BipartiteGraph) -> BipartiteGraph:
    adj = []
    for v in range(bg.n):
        adj.append(bg.opposite(v) & ~bg.adj[v])
    return BipartiteGraph(Graph(bg.n, tuple(adj)), bg.side_a, bg.side_b)


def bfs_layer_masks(g: Graph, v: int, within: int | None = None) -> list[int]:
    """Distance layers from ``v`` as bitmasks, restricted to ``within``."""
    if within is None:
        within = g.vertices_mask
    seen = 1 << v
    layers = [seen]
    frontier = seen
    while True:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= g.adj[x]
        nxt &= within & ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def bfs_layers(g: Graph, v: int) -> tuple[list[frozenset], frozenset]:
    """Layers at distance 0, 1, ... from ``v`` plus the unreachable vertices."""
    masks = bfs_layer_masks(g, v)
    reached = 0
    for m in masks:
        reached |= m
    return ([frozenset(iter_bits(m)) for m in masks],
            frozenset(iter_bits(g.vertices_mask & ~reached)))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    if within is None:
        within = g.vertices_mask
    out = []
    rest = within
    while rest:
        s = lowest(rest)
        comp = 0
        for layer in bfs_layer_masks(g, s, rest):
            comp |= layer
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [bits_list(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(component_masks(g))
