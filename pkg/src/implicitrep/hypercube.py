"""Induced subgraphs of hypercubes and their 2n-integer codes.

A code lists ``p(x_1), d(x_1), ..., p(x_n), d(x_n)`` (all 1-based): ``p`` is
the parent in a spanning forest (a root points to itself) and ``d`` is the
coordinate in which a vertex differs from its parent (1 for roots).  Each
component is embedded on its own with its root at the all-zeros vector.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .exceptions import CodeError, NotEmbeddableError, SearchBudgetExceeded
from .graph import BipartiteGraph, Graph, component_masks, iter_bits, lowest
from .structure import DEFAULT_BUDGET

__all__ = [
    "Embedding", "HypercubeCode", "NotEmbeddableError", "hypercube_embed", "hypercube_encode",
    "hypercube_decode", "bfs_forest",
]


@dataclass(frozen=True)
class Embedding:
    """``coords[v]`` is an integer whose bit ``j`` is coordinate ``j + 1``;
    ``comp[v]`` is the component index.  Only vertices of the same component
    are compared."""

    coords: tuple
    comp: tuple
    dim: int

    def vector(self, v: int) -> tuple:
        return tuple((self.coords[v] >> j) & 1 for j in range(self.dim))

    def is_valid(self, g) -> bool:
        g = g.g if isinstance(g, BipartiteGraph) else g
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if self.comp[u] != self.comp[v]:
                    if g.has_edge(u, v):
                        return False
                    continue
                diff = (self.coords[u] ^ self.coords[v]).bit_count()
                if diff == 0 or (diff == 1) != g.has_edge(u, v):
                    return False
        return True


@dataclass(frozen=True)
class HypercubeCode:
    n: int
    entries: tuple

    def to_csv(self) -> str:
        return ",".join(str(x) for x in self.entries)

    @classmethod
    def from_csv(cls, text: str) -> "HypercubeCode":
        text = text.strip()
        if not text:
            return cls(0, ())
        try:
            entries = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise CodeError(f"code must be comma-separated integers: {text[:40]!r}") from None
        if len(entries) % 2:
            raise CodeError(f"code has odd length {len(entries)}")
        return cls(len(entries) // 2, entries)

    @property
    def parents(self) -> tuple:
        return self.entries[0::2]

    @property
    def coordinates(self) -> tuple:
        return self.entries[1::2]


def bfs_forest(g) -> list[int]:
    """0-based parent of every vertex in the BFS forest grown from the
    smallest vertex of each component (roots are their own parent)."""
    g = g.g if isinstance(g, BipartiteGraph) else g
    parent = [-1] * g.n
    for s in range(g.n):
        if parent[s] != -1:
            continue
        parent[s] = s
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in iter_bits(g.adj[x]):
                if parent[y] == -1:
                    parent[y] = x
                    queue.append(y)
    return parent


def _bfs_order(g: Graph, root: int, comp: int) -> list[tuple[int, int]]:
    order = [(root, root)]
    seen = 1 << root
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x] & comp & ~seen):
            seen |= 1 << y
            order.append((y, x))
            queue.append(y)
    return order


def hypercube_embed(g, budget: int = DEFAULT_BUDGET) -> Embedding:
    """Backtracking search for an induced embedding of every component into
    a hypercube, root (smallest vertex) at the origin.  Vertices are placed
    in BFS order next to their BFS parent; a fresh coordinate is only ever
    the next unused one, so the search is exact."""
    g = g.g if isinstance(g, BipartiteGraph) else g
    coords = [0] * g.n
    comp_id = [0] * g.n
    dim = 0
    nodes = 0
    for ci, comp in enumerate(component_masks(g)):
        order = _bfs_order(g, lowest(comp), comp)
        placed: dict[int, int] = {}
        used_coords: set[int] = set()
        result = None

        def rec(i, used_dims):
            nonlocal nodes, result
            if i == len(order):
                result = (dict(placed), used_dims)
                return True
            x, p = order[i]
            base = placed[p]
            for j in range(used_dims + 1):
                c = base ^ (1 << j)
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(budget, "hypercube embedding")
                if c in used_coords:
                    continue
                ok = True
                for y, cy in placed.items():
                    if ((c ^ cy).bit_count() == 1) != bool(g.adj[x] >> y & 1):
                        ok = False
                        break
                if not ok:
                    continue
                placed[x] = c
                used_coords.add(c)
                if rec(i + 1, max(used_dims, j + 1)):
                    return True
                del placed[x]
                used_coords.discard(c)
            return False

        root = order[0][0]
        placed[root] = 0
        used_coords.add(0)
        if not rec(1, 0):
            raise NotEmbeddableError(list(iter_bits(comp)))
        found, d = result
        dim = max(dim, d)
        for v, c in found.items():
            coords[v] = c
            comp_id[v] = ci
    return Embedding(tuple(coords), tuple(comp_id), dim)


def hypercube_encode(g, emb: Embedding | None = None, parents: list[int] | None = None) -> HypercubeCode:
    """2n-integer code from an embedding and a spanning forest (default: the
    BFS forest from the smallest vertex of each component)."""
    g = g.g if isinstance(g, BipartiteGraph) else g
    if emb is None:
        emb = hypercube_embed(g)
    elif not emb.is_valid(g):
        raise CodeError("embedding inconsistent with the graph")
    if parents is None:
        parents = bfs_forest(g)
    entries = []
    for v in range(g.n):
        p = parents[v]
        if p == v:
            entries += [v + 1, 1]
            continue
        if not g.has_edge(v, p):
            raise CodeError(f"forest edge ({p},{v}) is not an edge of the graph")
        diff = emb.coords[v] ^ emb.coords[p]
        entries += [p + 1, diff.bit_length()]
    return HypercubeCode(g.n, tuple(entries))


def hypercube_decode(code) -> Graph:
    """Rebuild the graph: coordinates follow the forest from each root at the
    origin, and two vertices of one tree are adjacent iff they differ in
    exactly one coordinate."""
    if not isinstance(code, HypercubeCode):
        entries = tuple(code)
        if len(entries) % 2:
            raise CodeError(f"code has odd length {len(entries)}")
        code = HypercubeCode(len(entries) // 2, entries)
    n = code.n
    if len(code.entries) != 2 * n:
        raise CodeError(f"expected {2 * n} entries, got {len(code.entries)}")
    for pos, x in enumerate(code.entries):
        if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= n:
            raise CodeError(f"entry {pos + 1} = {x!r} is outside 1..{n}")
    par = [p - 1 for p in code.parents]
    dirs = [d - 1 for d in code.coordinates]
    for v in range(n):
        if par[v] == v and dirs[v] != 0:
            raise CodeError(f"root x{v + 1} must have d = 1")
    coord = [None] * n
    root = [None] * n
    for v in range(n):
        path = []
        x = v
        on_path = set()
        while coord[x] is None and par[x] != x:
            if x in on_path:
                raise CodeError("parent entries contain a cycle")
            on_path.add(x)
            path.append(x)
            x = par[x]
        if coord[x] is None:
            coord[x], root[x] = 0, x
        for y in reversed(path):
            coord[y] = coord[par[y]] ^ (1 << dirs[y])
            root[y] = root[par[y]]
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if root[u] == root[v] and (coord[u] ^ coord[v]).bit_count() == 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))
