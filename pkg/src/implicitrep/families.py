"""Named graph families, hereditary class specs, enumeration and sampling.

Canonical vertex numbering (frozen; golden files depend on it):

* ``path(n)``, ``cycle(n)``: vertices in order along the path / cycle.
* ``complete_bipartite(n, m)``: side A is ``0..n-1``, side B is ``n..n+m-1``.
* ``star(n)``: centre 0, leaves ``1..n``.
* ``spider(i, j, k)`` (S_{i,j,k}): centre 0, then the branches of lengths
  i, j, k in turn, each listed outward from the centre.
* ``f1(t, p)``: centres c1=0, c2=1, their common neighbour w=2, then the t
  leaves of c1, then the p leaves of c2.  Side A is {c1, c2}.
* ``f(t, p)``: ``f1(t, p)`` plus an isolated vertex (last) on w's side.
* ``double_star(t)`` (unbalanced 2K_{1,t}): centres 0 and 1 on side A, then
  the t leaves of 0, then the t leaves of 1.
* ``d_graph(k)``: C4 v1..v4 = 0..3, pendant on v1 = 4, pendant on v2 = 5, then
  k pendants on v4.
* ``universal_chain(k)`` (Z_k): a_i = i-1, b_j = k+j-1, a_i ~ b_j iff j >= i.
* ``x_graph``, ``y_graph``, ``z_graph``, ``q_graph``, ``a_graph``: C4 on 0..3
  (cycle 0-1-2-3), extra vertices from 4 on (see each constructor).
* ``hypercube(d)``: vertex = integer bitstring, adjacent iff one bit differs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Iterator

from .exceptions import CapExceeded, ImplicitRepError, NotBipartiteError
from .graph import (
    BipartiteGraph,
    Graph,
    bipartite_complement,
    bipartite_graph,
    bipartition,
    build_graph,
    is_forest,
    iter_bits,
    mask_of,
)
from .structure import contains_induced, contains_one_sided, is_induced_embedding, long_induced_cycle

# ---------------------------------------------------------------- constructors


def _need(cond, msg):
    if not cond:
        raise ValueError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "K_n needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    _need(n >= 0, "n must be >= 0")
    return build_graph(n, [])


def path(n: int) -> BipartiteGraph:
    _need(n >= 1, "P_n needs n >= 1")
    return bipartition(build_graph(n, [(i, i + 1) for i in range(n - 1)]))


def cycle(n: int) -> Graph:
    _need(n >= 3, "C_n needs n >= 3")
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return bipartition(g) if n % 2 == 0 else g


def complete_bipartite(n: int, m: int) -> BipartiteGraph:
    _need(n >= 0 and m >= 0, "part sizes must be >= 0")
    return bipartite_graph(n + m, [(i, n + j) for i in range(n) for j in range(m)], range(n))


def star(n: int) -> BipartiteGraph:
    return complete_bipartite(1, n)


def spider(i: int, j: int, k: int) -> BipartiteGraph:
    _need(min(i, j, k) >= 1, "S_{i,j,k} needs branch lengths >= 1")
    edges, nxt = [], 1
    for length in (i, j, k):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return bipartition(build_graph(nxt, edges))


def f1(t: int, p: int) -> BipartiteGraph:
    _need(t >= 1 and p >= 1, "F1_{t,p} needs t, p >= 1")
    edges = [(0, 2), (1, 2)]
    edges += [(0, 3 + i) for i in range(t)]
    edges += [(1, 3 + t + i) for i in range(p)]
    return bipartite_graph(3 + t + p, edges, [0, 1])


def f(t: int, p: int) -> BipartiteGraph:
    base = f1(t, p)
    return bipartite_graph(base.n + 1, base.edges(), [0, 1])


def double_star(t: int) -> BipartiteGraph:
    """Unbalanced 2K_{1,t}: two stars whose centres share a side."""
    _need(t >= 1, "2K_{1,t} needs t >= 1")
    edges = [(0, 2 + i) for i in range(t)] + [(1, 2 + t + i) for i in range(t)]
    return bipartite_graph(2 + 2 * t, edges, [0, 1])


def _c4_plus(extra_n: int, extra_edges) -> BipartiteGraph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)] + list(extra_edges)
    return bipartition(build_graph(4 + extra_n, edges))


def d_graph(k: int) -> BipartiteGraph:
    _need(k >= 1, "D_k needs k >= 1")
    return _c4_plus(2 + k, [(0, 4), (1, 5)] + [(3, 6 + i) for i in range(k)])


def x_graph() -> BipartiteGraph:
    """C4 plus vertex 4 on vertex 0, carrying leaves 5 and 6."""
    return _c4_plus(3, [(0, 4), (4, 5), (4, 6)])


def y_graph() -> BipartiteGraph:
    """C4 plus a disjoint P3 4-5-6."""
    return _c4_plus(3, [(4, 5), (5, 6)])


def z_graph() -> BipartiteGraph:
    """C4 plus the pendant path 0-4-5-6."""
    return _c4_plus(3, [(0, 4), (4, 5), (5, 6)])


def q_graph() -> BipartiteGraph:
    """C4 with pendants 4 and 5 on vertex 0."""
    return _c4_plus(2, [(0, 4), (0, 5)])


def a_graph() -> BipartiteGraph:
    """C4 with pendant 4 on vertex 0 and pendant 5 on vertex 1."""
    return _c4_plus(2, [(0, 4), (1, 5)])


def universal_chain(k: int) -> BipartiteGraph:
    _need(k >= 1, "Z_k needs k >= 1")
    edges = [(i, k + j) for i in range(k) for j in range(i, k)]
    return bipartite_graph(2 * k, edges, range(k))


def matching(k: int) -> BipartiteGraph:
    """kK2 with edges (i, k+i)."""
    return bipartite_graph(2 * k, [(i, k + i) for i in range(k)], range(k))


def hypercube(d: int) -> BipartiteGraph:
    _need(d >= 0, "Q_d needs d >= 0")
    n = 1 << d
    return bipartition(build_graph(n, [(v, v ^ (1 << j)) for v in range(n) for j in range(d) if not v >> j & 1]))


def disjoint_copies(g, copies: int):
    _need(copies >= 1, "need at least one copy")
    if isinstance(g, BipartiteGraph):
        a, edges = [], []
        for c in range(copies):
            off = c * g.n
            a += [off + v for v in iter_bits(g.side_a)]
            edges += [(u + off, v + off) for u, v in g.edges()]
        return bipartite_graph(g.n * copies, edges, a)
    out = g
    for _ in range(copies - 1):
        out = out.disjoint_union(g)
    return out


FAMILIES: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "edgeless": (edgeless, ("n",)),
    "complete-bipartite": (complete_bipartite, ("n", "m")),
    "star": (star, ("n",)),
    "s-ijk": (spider, ("i", "j", "k")),
    "f": (f, ("t", "p")),
    "f1": (f1, ("t", "p")),
    "double-star": (double_star, ("t",)),
    "dk": (d_graph, ("k",)),
    "zk": (universal_chain, ("k",)),
    "matching": (matching, ("k",)),
    "x": (x_graph, ()),
    "y": (y_graph, ()),
    "z": (z_graph, ()),
    "q": (q_graph, ()),
    "a": (a_graph, ()),
    "hypercube": (hypercube, ("d",)),
}


def make(family: str, **params):
    """Build a named family member; ``copies`` gives a disjoint union."""
    try:
        ctor, names = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    copies = params.pop("copies", 1)
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise ValueError(f"family {family!r} takes parameters {names}, got {sorted(params)}")
    g = ctor(*(params[p] for p in names))
    return disjoint_copies(g, copies) if copies != 1 else g


# ------------------------------------------------------------- class specs

TWO_SIDED = "two-sided"
ONE_SIDED_A = "one-sided-A"
ONE_SIDED_B = "one-sided-B"
ORIENTATIONS = (TWO_SIDED, ONE_SIDED_A, ONE_SIDED_B)


@dataclass(frozen=True)
class Forbidden:
    name: str
    pattern: object
    orientation: str = TWO_SIDED

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if self.orientation != TWO_SIDED and not isinstance(self.pattern, BipartiteGraph):
            raise ValueError("one-sided patterns need a bipartition")


@dataclass(frozen=True)
class Membership:
    ok: bool
    violation: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"member": self.ok, "violation": self.violation, "witness": self.witness}


@dataclass(frozen=True, eq=False)
class ClassSpec:
    """Hereditary class given by forbidden (one-sided) induced subgraphs and
    structural flags.  ``extra`` holds ``(name, fn)`` with ``fn(g)``
    returning a witness tuple or None."""

    name: str
    forbidden: tuple = ()
    require_bipartite: bool = False
    require_chordal_bipartite: bool = False
    require_forest: bool = False
    extra: tuple = ()
    params: dict = field(default_factory=dict)
    edge_prob: float | None = None

    @property
    def bipartite(self) -> bool:
        return (
            self.require_bipartite
            or self.require_chordal_bipartite
            or any(fb.orientation != TWO_SIDED for fb in self.forbidden)
        )

    def member(self, g) -> Membership:
        return member(self, g)


def member(spec: ClassSpec, g, budget: int | None = None) -> Membership:
    kw = {} if budget is None else {"budget": budget}
    plain = g.g if isinstance(g, BipartiteGraph) else g
    bg = None
    if spec.bipartite:
        try:
            bg = g if isinstance(g, BipartiteGraph) else bipartition(g)
        except NotBipartiteError as exc:
            return Membership(False, "odd cycle", exc.witness)
    if spec.require_forest and not is_forest(plain):
        return Membership(False, "cycle", _any_cycle(plain))
    if spec.require_chordal_bipartite:
        cyc = long_induced_cycle(plain)
        if cyc is not None:
            return Membership(False, "induced cycle of length >= 6", cyc)
    for fb in spec.forbidden:
        if fb.orientation == TWO_SIDED:
            w = contains_induced(plain, fb.pattern, **kw)
        elif fb.orientation == ONE_SIDED_A:
            w = contains_one_sided(bg, fb.pattern, **kw)
        else:
            w = contains_one_sided(bg.swap(), fb.pattern, **kw)
        if w is not None:
            return Membership(False, fb.name, w)
    for name, fn in spec.extra:
        w = fn(g)
        if w is not None:
            return Membership(False, name, tuple(w))
    return Membership(True)


def _is_cycle(g: Graph, cyc, induced: bool) -> bool:
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k or any(not 0 <= v < g.n for v in cyc):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if consecutive and not g.has_edge(cyc[i], cyc[j]):
                return False
            if induced and not consecutive and g.has_edge(cyc[i], cyc[j]):
                return False
    return True


def check_witness(spec: ClassSpec, g, violation: str, witness) -> bool:
    """Independent certificate check for a non-membership claim: the witness
    really is an odd cycle, a long induced cycle, or an (oriented) induced
    copy of the named forbidden pattern."""
    plain = g.g if isinstance(g, BipartiteGraph) else g
    if witness is None:
        return False
    w = tuple(witness)
    if violation == "odd cycle":
        return len(w) % 2 == 1 and _is_cycle(plain, w, False)
    if violation == "cycle":
        return _is_cycle(plain, w, False)
    if violation == "induced cycle of length >= 6":
        return len(w) >= 6 and _is_cycle(plain, w, True)
    for fb in spec.forbidden:
        if fb.name != violation:
            continue
        if not is_induced_embedding(plain, fb.pattern, w):
            return False
        if fb.orientation == TWO_SIDED:
            return True
        bg = g if isinstance(g, BipartiteGraph) else bipartition(g)
        ref = bg if fb.orientation == ONE_SIDED_A else bg.swap()
        return all((fb.pattern.side_a >> i & 1) == (ref.side_a >> x & 1) for i, x in enumerate(w))
    for name, fn in spec.extra:
        if name == violation:
            return not member(spec, g).ok
    return False


def _any_cycle(g: Graph) -> tuple:
    parent = {}
    for s in range(g.n):
        if s in parent:
            continue
        parent[s] = -1
        stack = [s]
        while stack:
            x = stack.pop()
            for y in iter_bits(g.adj[x]):
                if y == parent[x]:
                    continue
                if y in parent:
                    # y is already discovered: walk both up to their meeting point
                    px, py = [x], [y]
                    while px[-1] != -1:
                        px.append(parent[px[-1]])
                    while py[-1] != -1:
                        py.append(parent[py[-1]])
                    common = set(px) & set(py)
                    cx = [v for v in px if v not in common]
                    cy = [v for v in py if v not in common]
                    meet = next(v for v in px if v in common)
                    return tuple(cx + [meet] + cy[::-1])
                parent[y] = x
                stack.append(y)
    return ()


# named registry ------------------------------------------------------------


def _triangle_free(g):
    g = g.g if isinstance(g, BipartiteGraph) else g
    return contains_induced(g, complete(3))


def _hypercube_subgraph(g):
    from .hypercube import NotEmbeddableError, hypercube_embed

    g = g.g if isinstance(g, BipartiteGraph) else g
    try:
        hypercube_embed(g)
    except NotEmbeddableError as exc:
        return exc.witness
    return None


def _complete_only(g):
    g = g.g if isinstance(g, BipartiteGraph) else g
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                return (u, v)
    return None


def class_spec(name: str, t: int = 2, k: int = 3) -> ClassSpec:
    """Named hereditary classes used by the schemes, suites and the CLI."""
    F = Forbidden
    specs = {
        "all": lambda: ClassSpec("all"),
        "bipartite": lambda: ClassSpec("bipartite", require_bipartite=True),
        "forest": lambda: ClassSpec("forest", require_forest=True),
        "triangle-free": lambda: ClassSpec("triangle-free", extra=(("K3", _triangle_free),)),
        "complete": lambda: ClassSpec("complete", extra=(("non-edge", _complete_only),)),
        "chordal-bipartite": lambda: ClassSpec("chordal-bipartite", require_chordal_bipartite=True, edge_prob=0.2),
        "chain": lambda: ClassSpec("chain", (F("2K2", matching(2)),), require_bipartite=True),
        "biclique-union": lambda: ClassSpec("biclique-union", (F("P4", path(4)),), require_bipartite=True),
        "double-star-free": lambda: ClassSpec(
            "double-star-free",
            (F(f"2K_1,{t} (A)", double_star(t), ONE_SIDED_A), F(f"2K_1,{t} (B)", double_star(t), ONE_SIDED_B)),
            params={"t": t},
        ),
        "f1tt": lambda: ClassSpec("f1tt", (F(f"F1_{t},{t}", f1(t, t)),), require_bipartite=True, params={"t": t}),
        "ftt": lambda: ClassSpec("ftt", (F(f"F_{t},{t}", f(t, t)),), require_bipartite=True, params={"t": t}),
        "one-sided-f1t1": lambda: ClassSpec(
            "one-sided-f1t1", (F(f"F1_{t},1 (A)", f1(t, 1), ONE_SIDED_A),), params={"t": t}
        ),
        "one-sided-ft1": lambda: ClassSpec(
            "one-sided-ft1", (F(f"F_{t},1 (A)", f(t, 1), ONE_SIDED_A),), params={"t": t}
        ),
        "s222-chordal": lambda: ClassSpec(
            "s222-chordal", (F("S_2,2,2", spider(2, 2, 2)),), require_chordal_bipartite=True, edge_prob=0.2
        ),
        "dk-chordal": lambda: ClassSpec(
            "dk-chordal", (F(f"D_{k}", d_graph(k)),), require_chordal_bipartite=True, params={"k": k}, edge_prob=0.2
        ),
        "zk-chordal": lambda: ClassSpec(
            "zk-chordal", (F(f"Z_{k}", universal_chain(k)),), require_chordal_bipartite=True, params={"k": k},
            edge_prob=0.2,
        ),
        "x-chordal": lambda: ClassSpec("x-chordal", (F("X", x_graph()),), require_chordal_bipartite=True, edge_prob=0.2),
        "y-chordal": lambda: ClassSpec("y-chordal", (F("Y", y_graph()),), require_chordal_bipartite=True, edge_prob=0.2),
        "z-chordal": lambda: ClassSpec("z-chordal", (F("Z", z_graph()),), require_chordal_bipartite=True, edge_prob=0.2),
        "hypercube": lambda: ClassSpec("hypercube", extra=(("not hypercube-embeddable", _hypercube_subgraph),)),
    }
    try:
        return specs[name]()
    except KeyError:
        raise ValueError(f"unknown class {name!r}; known: {', '.join(sorted(specs))}") from None


CLASS_NAMES = (
    "all", "bipartite", "forest", "triangle-free", "complete", "chordal-bipartite", "chain",
    "biclique-union", "double-star-free", "f1tt", "ftt", "one-sided-f1t1", "one-sided-ft1",
    "s222-chordal", "dk-chordal", "zk-chordal", "x-chordal", "y-chordal", "z-chordal", "hypercube",
)


# ------------------------------------------------------------- enumeration


def enumerate_bipartite(n_a: int, n_b: int, cap: int = 30) -> Iterator[BipartiteGraph]:
    """All 2^(n_a*n_b) side-respecting graphs; bit k of the index is the pair
    (a_{k // n_b}, b_{k % n_b}).  Side A is ``0..n_a-1``."""
    if n_a * n_b > cap:
        raise CapExceeded("enumerate_bipartite pair count", n_a * n_b, cap)
    pairs = [(i, n_a + j) for i in range(n_a) for j in range(n_b)]
    side_a = mask_of(range(n_a))
    n = n_a + n_b
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k in iter_bits(code):
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield BipartiteGraph(Graph(n, tuple(adj)), side_a, full & ~side_a)


def _from_columns(n_a: int, cols) -> BipartiteGraph:
    n_b = len(cols)
    edges = [(i, n_a + j) for j, c in enumerate(cols) for i in range(n_a) if c >> i & 1]
    return bipartite_graph(n_a + n_b, edges, range(n_a))


def bipartite_classes(n_a: int, n_b: int) -> list[BipartiteGraph]:
    """One representative per side-preserving isomorphism class."""
    perms = list(permutations(range(n_a)))
    seen = set()
    out = []
    for cols in combinations_with_replacement(range(1 << n_a), n_b):
        best = None
        for p in perms:
            key = tuple(sorted(sum(1 << p[i] for i in range(n_a) if c >> i & 1) for c in cols))
            if best is None or key < best:
                best = key
        if best not in seen:
            seen.add(best)
            out.append(_from_columns(n_a, best))
    return out


# ---------------------------------------------------------------- sampling


class SamplingError(ImplicitRepError, RuntimeError):
    def __init__(self, attempts):
        super().__init__(f"no class member found within {attempts} attempts")
        self.witness = attempts


def random_bipartite(n: int, rng: random.Random, p: float) -> BipartiteGraph:
    sides = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v) for u, v in combinations(range(n), 2) if sides[u] != sides[v] and rng.random() < p]
    return bipartite_graph(n, edges, [v for v in range(n) if sides[v]])


def random_graph(n: int, rng: random.Random, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_chordal_bipartite(n: int, rng: random.Random, p: float) -> BipartiteGraph:
    """Grow a chordal bipartite graph by adding weakly simplicial vertices:
    each new vertex gets neighbours whose neighbourhoods form a chain."""
    sides = []
    adj = []
    for v in range(n):
        s = rng.random() < 0.5
        opp = [u for u in range(v) if sides[u] != s]
        rng.shuffle(opp)
        chosen = []
        for u in opp:
            if rng.random() >= p:
                continue
            nu = adj[u]
            if all((nu & adj[w]) in (nu, adj[w]) for w in chosen):
                chosen.append(u)
        row = 0
        for u in chosen:
            adj[u] |= 1 << v
            row |= 1 << u
        adj.append(row)
        sides.append(s)
    g = Graph(n, tuple(adj))
    a = mask_of(v for v in range(n) if sides[v])
    return BipartiteGraph(g, a, g.vertices_mask & ~a)


def random_tree(n: int, rng: random.Random) -> BipartiteGraph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return bipartition(build_graph(n, edges))


def random_caterpillar(n: int, rng: random.Random) -> BipartiteGraph:
    spine = max(1, n // 3)
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(rng.randrange(spine), v) for v in range(spine, n)]
    return bipartition(build_graph(n, edges))


def random_chain(n: int, rng: random.Random) -> BipartiteGraph:
    """Random induced subgraph of Z_n with n vertices in total."""
    k = n
    z = universal_chain(k)
    chosen = sorted(rng.sample(range(2 * k), n))
    return z.induced(chosen)


def repair(spec: ClassSpec, g):
    """Delete witness vertices (largest degree first, ties to the smallest
    index) until ``g`` is a member; returns the induced subgraph."""
    cur = g
    while True:
        res = member(spec, cur)
        if res.ok:
            return cur
        wit = [x for x in res.witness if isinstance(x, int)] if res.witness else []
        plain = cur.g if isinstance(cur, BipartiteGraph) else cur
        if not wit:
            wit = list(range(plain.n))
        victim = max(sorted(set(wit)), key=lambda v: (plain.degree(v), -v))
        cur = cur.induced([v for v in range(plain.n) if v != victim])


def sample_in_class(spec: ClassSpec, n: int, seed: int, edge_prob: float | None = None,
                    mode: str = "reject", attempts: int = 1000):
    """Seeded random member of ``spec``.  ``mode="reject"`` redraws until the
    sample is a member; ``mode="repair"`` deletes witness vertices instead
    (the result may have fewer than ``n`` vertices)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if mode not in ("reject", "repair"):
        raise ValueError("mode must be 'reject' or 'repair'")
    p = edge_prob if edge_prob is not None else (spec.edge_prob if spec.edge_prob is not None else 0.5)
    rng = random.Random(seed)
    for _ in range(attempts):
        if spec.require_chordal_bipartite:
            g = random_chordal_bipartite(n, rng, p)
        elif spec.bipartite:
            g = random_bipartite(n, rng, p)
        else:
            g = random_graph(n, rng, p)
        if mode == "repair":
            return repair(spec, g)
        if member(spec, g).ok:
            return g
    raise SamplingError(attempts)


def complement_is_forest(bg: BipartiteGraph) -> bool:
    return is_forest(bipartite_complement(bg).g)
