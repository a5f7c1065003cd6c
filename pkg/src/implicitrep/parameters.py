"""Exact graph parameters at desk scale.

The exponential ones (``sd_graph``, ``contiguity``, ``chain_partition_number``)
take an explicit size cap and raise CapExceeded beyond it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import CapExceeded, ChainPartitionExhausted, SearchBudgetExceeded
from .families import double_star
from .graph import BipartiteGraph, Graph, iter_bits
from .structure import contains_one_sided


@dataclass(frozen=True)
class ParamReport:
    name: str
    value: int
    witness: object = None
    method: str = "exact"

    def to_dict(self):
        w = self.witness
        if isinstance(w, tuple) and w and isinstance(w[0], (list, tuple, frozenset)):
            w = [sorted(x) for x in w]
        elif isinstance(w, (tuple, frozenset, set)):
            w = list(w)
        return {"parameter": self.name, "value": self.value, "witness": w, "method": self.method}


def _plain(g) -> Graph:
    return g.g if isinstance(g, BipartiteGraph) else g


def sd_pair(g, x: int, y: int) -> int:
    """Number of vertices other than x, y adjacent to exactly one of them."""
    g = _plain(g)
    if x == y:
        raise ValueError("sd_pair needs two distinct vertices")
    return ((g.adj[x] ^ g.adj[y]) & ~(1 << x) & ~(1 << y)).bit_count()


def _min_pair_sd_mask(adj, sel: int):
    best, arg = None, None
    verts = list(iter_bits(sel))
    for i, x in enumerate(verts):
        ax = adj[x]
        for y in verts[i + 1:]:
            s = ((ax ^ adj[y]) & sel & ~(1 << x) & ~(1 << y)).bit_count()
            if best is None or s < best:
                best, arg = s, (x, y)
                if s == 0:
                    return best, arg
    return best, arg


def min_pair_sd(g) -> ParamReport:
    g = _plain(g)
    if g.n < 2:
        raise ValueError("min_pair_sd needs at least two vertices")
    best, arg = _min_pair_sd_mask(g.adj, g.vertices_mask)
    return ParamReport("min_pair_sd", best, arg)


def sd_graph(g, cap: int = 14) -> ParamReport:
    """Maximum over induced subgraphs on >= 2 vertices of min_pair_sd; the
    witness is the maximising vertex set."""
    g = _plain(g)
    if g.n > cap:
        raise CapExceeded("sd_graph vertex count", g.n, cap)
    if g.n < 2:
        return ParamReport("sd", 0, tuple(range(g.n)))
    best, arg = -1, None
    for sel in range(1, 1 << g.n):
        if sel.bit_count() < 2:
            continue
        # no pair can exceed |S| - 2
        if sel.bit_count() - 2 <= best:
            continue
        val, _ = _min_pair_sd_mask(g.adj, sel)
        if val > best:
            best, arg = val, sel
    return ParamReport("sd", best, tuple(iter_bits(arg)))


def h_index(g) -> ParamReport:
    g = _plain(g)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = 0
    while k < g.n and g.degree(order[k]) >= k + 1:
        k += 1
    return ParamReport("h_index", k, tuple(sorted(order[:k])))


def degeneracy(g) -> tuple[int, list[int]]:
    """(d, order): repeatedly remove a minimum-degree vertex (smallest index
    first); d is the largest degree seen at removal."""
    g = _plain(g)
    alive = g.vertices_mask
    d, order = 0, []
    while alive:
        v = min(iter_bits(alive), key=lambda x: ((g.adj[x] & alive).bit_count(), x))
        d = max(d, (g.adj[v] & alive).bit_count())
        order.append(v)
        alive &= ~(1 << v)
    return d, order


def contiguity_of_order(g, order) -> int:
    g = _plain(g)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    runs = [0] * g.n
    prev = None
    for w in order:
        for v in iter_bits(g.adj[w]):
            if prev is None or not g.adj[v] >> prev & 1:
                runs[v] += 1
        prev = w
    return max(runs, default=0)


def contiguity(g, cap: int = 9) -> ParamReport:
    """Minimum over vertex orders of the largest number of maximal runs an
    (open) neighbourhood splits into; branch and bound over orders."""
    g = _plain(g)
    if g.n > cap:
        raise CapExceeded("contiguity vertex count", g.n, cap)
    if g.edge_count == 0:
        return ParamReport("contiguity", 0, tuple(range(g.n)))
    best = contiguity_of_order(g, range(g.n))
    best_order = list(range(g.n))
    if best == 1:
        return ParamReport("contiguity", 1, tuple(best_order))
    n = g.n
    runs = [0] * n
    order = []

    def rec(used, cur_max):
        nonlocal best, best_order
        if len(order) == n:
            best, best_order = cur_max, list(order)
            return best == 1
        prev = order[-1] if order else None
        for w in range(n):
            if used >> w & 1:
                continue
            bumped = []
            worst = cur_max
            for v in iter_bits(g.adj[w]):
                if prev is None or not g.adj[v] >> prev & 1:
                    runs[v] += 1
                    bumped.append(v)
                    if runs[v] > worst:
                        worst = runs[v]
            if worst < best:
                order.append(w)
                done = rec(used | (1 << w), worst)
                order.pop()
            else:
                done = False
            for v in bumped:
                runs[v] -= 1
            if done:
                return True
        return False

    rec(0, 0)
    return ParamReport("contiguity", best, tuple(best_order))


def find_chain_partition(g, max_parts: int, budget: int = 1_000_000, order=None):
    """Partition into <= max_parts homogeneous sets (cliques or independent
    sets) with 2K2-free edges between every two parts, or None."""
    g = _plain(g)
    n = g.n
    if order is None:
        order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    parts: list[int] = []
    kinds: list[int | None] = []  # 1 clique, 0 independent, None singleton
    nodes = 0

    def fits(x, i):
        p = parts[i]
        if p:
            inside = g.adj[x] & p
            if kinds[i] is None:
                kind = 1 if inside else 0
            else:
                kind = kinds[i]
            if (kind == 1 and inside != p) or (kind == 0 and inside):
                return False
        for j, q in enumerate(parts):
            if j == i or not q:
                continue
            nx = g.adj[x] & q
            for y in iter_bits(p):
                ny = g.adj[y] & q
                if nx & ny != nx and nx & ny != ny:
                    return False
        return True

    def rec(k):
        nonlocal nodes
        if k == n:
            return True
        x = order[k]
        for i in range(len(parts) + 1):
            if i == len(parts):
                if len(parts) >= max_parts:
                    break
                parts.append(0)
                kinds.append(None)
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget, "chain partition search")
            if fits(x, i):
                old_kind = kinds[i]
                if parts[i]:
                    kinds[i] = 1 if g.adj[x] & parts[i] else 0
                parts[i] |= 1 << x
                if rec(k + 1):
                    return True
                parts[i] &= ~(1 << x)
                kinds[i] = old_kind
            if parts[i] == 0:
                parts.pop()
                kinds.pop()
        return False

    if rec(0):
        return [sorted(iter_bits(p)) for p in parts]
    return None


def chain_partition_number(g, cap_k: int = 6, cap_n: int = 12) -> ParamReport:
    g = _plain(g)
    if g.n > cap_n:
        raise CapExceeded("chain_partition_number vertex count", g.n, cap_n)
    if g.n == 0:
        return ParamReport("chain_partition_number", 0, ())
    for k in range(1, cap_k + 1):
        parts = find_chain_partition(g, k, budget=10**8)
        if parts is not None:
            return ParamReport("chain_partition_number", k, tuple(tuple(p) for p in parts))
    return ParamReport("chain_partition_number", cap_k + 1, None, method="lower-bound")


def chain_partition(g, max_parts: int = 8, budget: int = 1_000_000):
    """Like find_chain_partition but raises ChainPartitionExhausted."""
    try:
        parts = find_chain_partition(g, max_parts, budget)
    except SearchBudgetExceeded:
        raise ChainPartitionExhausted(max_parts, range(_plain(g).n), budget_hit=True) from None
    if parts is None:
        raise ChainPartitionExhausted(max_parts, range(_plain(g).n))
    return parts


def is_double_star_free(bg: BipartiteGraph, t: int) -> tuple[bool, tuple | None]:
    """No induced 2K_{1,t} with both centres on the same side."""
    if t < 1:
        raise ValueError("t must be >= 1")
    pat = double_star(t)
    w = contains_one_sided(bg, pat)
    if w is None:
        w = contains_one_sided(bg.swap(), pat)
    return (w is None, w)
