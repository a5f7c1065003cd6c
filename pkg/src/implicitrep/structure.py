"""Induced-substructure search and the structural predicates used by the schemes."""
from __future__ import annotations

from collections import deque

from .exceptions import NotInClassError, SearchBudgetExceeded
from .graph import BipartiteGraph, Graph, bipartition, iter_bits, lowest

DEFAULT_BUDGET = 10_000_000


def _search_order(pattern: Graph) -> list[int]:
    """Pattern vertices ordered so that each one (after the first of its
    component) has an already placed neighbour; high degree first."""
    order, placed = [], 0
    remaining = set(range(pattern.n))
    while remaining:
        start = max(remaining, key=lambda v: (pattern.degree(v), -v))
        placed |= 1 << start
        remaining.discard(start)
        order.append(start)
        while True:
            touching = [v for v in remaining if pattern.adj[v] & placed]
            if not touching:
                break
            nxt = max(touching, key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.degree(v), -v))
            order.append(nxt)
            placed |= 1 << nxt
            remaining.discard(nxt)
    return order


def _embed(host: Graph, pattern: Graph, allowed: list[int], budget: int):
    if pattern.n == 0:
        return ()
    if pattern.n > host.n:
        return None
    order = _search_order(pattern)
    pos = {p: i for i, p in enumerate(order)}
    host_deg = host.degrees()
    # constraints for position i: list of (earlier position, edge?)
    checks = []
    twin_prev = []
    for i, p in enumerate(order):
        checks.append([(pos[q], bool(pattern.adj[p] >> q & 1)) for q in order[:i]])
        prev = -1
        for j in range(i - 1, -1, -1):
            q = order[j]
            same_open = (pattern.adj[p] & ~(1 << q)) == (pattern.adj[q] & ~(1 << p))
            if same_open and allowed[p] == allowed[q]:
                prev = j
                break
        twin_prev.append(prev)
    cand_base = []
    for p in order:
        need = pattern.degree(p)
        m = 0
        for v in iter_bits(allowed[p]):
            if host_deg[v] >= need:
                m |= 1 << v
        cand_base.append(m)
    img = [0] * pattern.n
    k = pattern.n
    nodes = 0

    def rec(i, used):
        nonlocal nodes
        if i == k:
            return True
        cand = cand_base[i] & ~used
        for j, edge in checks[i]:
            cand &= host.adj[img[j]] if edge else ~host.adj[img[j]]
            if not cand:
                return False
        tp = twin_prev[i]
        if tp >= 0:
            cand &= ~((2 << img[tp]) - 1)
        while cand:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget, "induced subgraph search")
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    if not rec(0, 0):
        return None
    out = [0] * pattern.n
    for i, p in enumerate(order):
        out[p] = img[i]
    return tuple(out)


def contains_induced(host: Graph, pattern: Graph, budget: int = DEFAULT_BUDGET):
    """Return a tuple ``w`` with ``w[i]`` the host image of pattern vertex
    ``i`` for some induced embedding, or None if there is none."""
    host = _plain(host)
    pattern = _plain(pattern)
    full = host.vertices_mask
    return _embed(host, pattern, [full] * pattern.n, budget)


def contains_one_sided(host: BipartiteGraph, pattern: BipartiteGraph, budget: int = DEFAULT_BUDGET):
    """Induced embedding mapping pattern side A into host side A and pattern
    side B into host side B."""
    allowed = [host.side_a if pattern.side_a >> p & 1 else host.side_b for p in range(pattern.n)]
    return _embed(host.g, pattern.g, allowed, budget)


def contains_side_respecting(host: BipartiteGraph, pattern: BipartiteGraph, budget: int = DEFAULT_BUDGET):
    """One-sided containment in either orientation of the pattern."""
    w = contains_one_sided(host, pattern, budget)
    if w is None:
        w = contains_one_sided(host, pattern.swap(), budget)
    return w


def _plain(g) -> Graph:
    return g.g if isinstance(g, BipartiteGraph) else g


def is_induced_embedding(host: Graph, pattern: Graph, w) -> bool:
    host, pattern = _plain(host), _plain(pattern)
    if len(w) != pattern.n or len(set(w)) != len(w):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(w[i], w[j]):
                return False
    return True


def long_induced_cycle(g) -> tuple | None:
    """An induced cycle of length >= 6 in a bipartite graph, or None."""
    g = _plain(g)
    full = g.vertices_mask
    for b in range(g.n):
        for c in iter_bits(g.adj[b] >> (b + 1) << (b + 1)):
            nb = g.adj[b] | (1 << b)
            nc = g.adj[c] | (1 << c)
            outside = full & ~nb & ~nc
            a_cands = g.adj[b] & ~nc
            d_cands = g.adj[c] & ~nb
            if not a_cands or not d_cands:
                continue
            for a in iter_bits(a_cands):
                targets = d_cands & ~g.adj[a]
                if not targets:
                    continue
                dist, parent = _bfs_within(g, a, outside | (1 << a))
                for d in iter_bits(targets):
                    best = None
                    for r in iter_bits(g.adj[d] & outside):
                        if r in dist and (best is None or dist[r] < dist[best]):
                            best = r
                    if best is None:
                        continue
                    path = [best]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return tuple([b, c, d] + path[::-1])
    return None


def _bfs_within(g: Graph, s: int, within: int):
    dist = {s: 0}
    parent = {}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x] & within):
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def is_chordal_bipartite(g) -> tuple[bool, tuple | None]:
    """(True, None) or (False, cycle).  Raises NotBipartiteError for
    non-bipartite input."""
    bipartition(_plain(g))
    cyc = long_induced_cycle(g)
    return (cyc is None, cyc)


def chain_witness(bg: BipartiteGraph) -> tuple | None:
    """An induced 2K2 (a1, b1, a2, b2) with a_i ~ b_i, or None if chain."""
    rows = sorted(iter_bits(bg.side_a), key=lambda v: (-bg.g.degree(v), v))
    for i in range(len(rows) - 1):
        hi, lo = rows[i], rows[i + 1]
        extra = bg.adj[lo] & ~bg.adj[hi]
        if extra:
            b2 = lowest(extra)
            b1 = lowest(bg.adj[hi] & ~bg.adj[lo])
            return (hi, b1, lo, b2)
    return None


def is_chain(bg: BipartiteGraph) -> bool:
    return chain_witness(bg) is None


def p5_through(g: Graph, v: int) -> tuple | None:
    """An induced P5 (x1, x2, v, x4, x5) with v in the middle, or None."""
    g = _plain(g)
    nv = g.adj[v] | (1 << v)
    nbrs = list(iter_bits(g.adj[v]))
    for i, x2 in enumerate(nbrs):
        for x4 in nbrs[i + 1:]:
            if g.adj[x2] >> x4 & 1:
                continue
            left = g.adj[x2] & ~nv & ~g.adj[x4]
            right = g.adj[x4] & ~nv & ~g.adj[x2]
            if not left or not right:
                continue
            for x1 in iter_bits(left):
                ok = right & ~g.adj[x1] & ~(1 << x1)
                if ok:
                    return (x1, x2, v, x4, lowest(ok))
    return None


def find_non_p5_center(g) -> int:
    g = _plain(g)
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    found = []
    for v in range(g.n):
        p = p5_through(g, v)
        if p is None:
            return v
        found.append(p)
    raise NotInClassError("P5 at every vertex", found, "input is not chordal bipartite")
