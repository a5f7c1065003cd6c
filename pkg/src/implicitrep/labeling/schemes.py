"""Concrete labeling schemes for hereditary classes of bipartite graphs.

Every builder works on a vertex mask of one fixed host graph and returns a
``{vertex: node}`` map, so that schemes can be nested inside covers, splits
and complement wrappers without renumbering.  The public ``*_scheme``
functions wrap a builder, pick the width for the whole graph and attach the
scheme's frozen size bound.

When a structural claim of a construction fails, the builder raises
``_Structural`` with a candidate witness.  The public wrapper checks the
candidate against the class's forbidden pattern; if it is not a valid copy it
searches the input for one.  An in-class input on which a claim fails is
reported as SchemeInvariantError, never relabelled silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..exceptions import (
    ChainPartitionExhausted,
    DecompositionError,
    NotInClassError,
    SchemeInvariantError,
)
from ..families import ONE_SIDED_A, ONE_SIDED_B, class_spec, matching, member
from ..graph import BipartiteGraph, bipartite_complement, bit, bits_list, bfs_layer_masks, component_masks, iter_bits, lowest
from ..parameters import chain_partition
from ..structure import contains_induced, is_induced_embedding, p5_through
from ..validation import check_bipartite_graph, check_count
from . import nodes as N
from .core import (
    BICLIQUE_BOUND,
    CHAIN_BOUND,
    EMPTY_BOUND,
    STAR_BOUND,
    Bound,
    Labeling,
    SplitStep,
    complement_bound,
    cover_bound,
    cover_nodes,
    labeling_from_nodes,
    partition_bound,
    split_bound,
    split_nodes,
)


class _Structural(Exception):
    """A construction step failed; ``witness`` is a candidate copy of the
    pattern called ``name`` in graph ``host``."""

    def __init__(self, detail, host=None, name=None, witness=None):
        super().__init__(detail)
        self.detail = detail
        self.host = host
        self.name = name
        self.witness = witness


def _deg(adj, x, within):
    return (adj[x] & within).bit_count()


def _max_degree(adj, candidates, within):
    """Largest degree inside ``within``; ties go to the smallest index."""
    return max(iter_bits(candidates), key=lambda x: (_deg(adj, x, within), -x))


def _take(mask, k):
    out = []
    for v in iter_bits(mask):
        if len(out) == k:
            break
        out.append(v)
    return out


# ------------------------------------------------------------------ builders


def _star_nodes(center, leaves):
    out = {center: N.StarNode(1)}
    for x in iter_bits(leaves):
        out[x] = N.StarNode(0)
    return out


def _chain_nodes(bg, a_mask, b_mask):
    adj = bg.adj
    rows = sorted(iter_bits(a_mask), key=lambda v: (-_deg(adj, v, b_mask), v))
    for hi, lo in zip(rows, rows[1:]):
        extra = adj[lo] & b_mask & ~adj[hi]
        if extra:
            b1 = lowest(adj[hi] & b_mask & ~adj[lo])
            raise _Structural("not a chain graph", bg.g, "2K2", (hi, lo, b1, lowest(extra)))
    rank = {v: i + 1 for i, v in enumerate(rows)}
    out = {v: N.ChainNode(0, r) for v, r in rank.items()}
    for y in iter_bits(b_mask):
        out[y] = N.ChainNode(1, max((rank[x] for x in iter_bits(adj[y] & a_mask)), default=0))
    return out


def _biclique_nodes(bg, mask):
    adj = bg.adj
    out = {}
    cid = 1
    for comp in component_masks(bg.g, mask):
        if comp.bit_count() == 1:
            v = lowest(comp)
            out[v] = N.BicliqueNode(0, bg.side(v))
            continue
        ca, cb = comp & bg.side_a, comp & bg.side_b
        for x in iter_bits(ca):
            if adj[x] & cb != cb:
                raise _Structural("component is not complete bipartite", bg.g, "P4",
                                  _p4_in(bg, comp, x, lowest(cb & ~adj[x])))
        for v in iter_bits(comp):
            out[v] = N.BicliqueNode(cid, bg.side(v))
        cid += 1
    return out


def _p4_in(bg, comp, x, y):
    # the first four vertices of a shortest x-y path (length >= 3, odd)
    parent = {x: None}
    frontier = [x]
    while y not in parent:
        nxt = []
        for a in frontier:
            for b in iter_bits(bg.adj[a] & comp):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    walk = [y]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])
    return tuple(walk[::-1][:4])


def double_star_degree(t: int) -> int:
    """The per-step list bound for double-star-free graphs."""
    return max(t - 1, (t - 1) * (t * t - 4 * t + 5))


def _rule_default(bg, cur, d):
    for v in iter_bits(cur):
        if _deg(bg.adj, v, cur) <= d or bg.bi_codegree(v, cur) <= d:
            return v
    return None


def _rule_min_degree(bg, cur, d):
    v = min(iter_bits(cur), key=lambda x: (_deg(bg.adj, x, cur), x))
    return v if _deg(bg.adj, v, cur) <= d else None


PEEL_RULES = {"default": _rule_default, "min-degree": _rule_min_degree}


def _peel_nodes(bg, mask, d, rule):
    def provider(_, cur):
        v = rule(bg, cur, d)
        if v is None:
            raise _Structural(f"no vertex with degree or bi-codegree <= {d}", None, None, tuple(iter_bits(cur)))
        return SplitStep(bit(v), cur & ~bit(v))

    return split_nodes(bg, mask, provider, d, True)


def _f1t1_nodes(bg, mask, t, heavy):
    """Split recursion for graphs without a one-sided F1_{t,1} whose centres
    lie in ``heavy``."""
    adj = bg.adj

    def provider(_, cur):
        hv = cur & heavy
        if not any(adj[x] & cur for x in iter_bits(hv)):
            return SplitStep(cur)
        other = cur & ~heavy
        u = _max_degree(adj, hv, cur)
        v1 = adj[u] & other
        v0 = other & ~v1
        A, B1, B2 = bit(u), v1, v0
        for x in iter_bits(hv & ~bit(u)):
            n1, n0 = adj[x] & v1, adj[x] & v0
            if n1 and n0:
                v10 = v1 & ~adj[x]
                if v10.bit_count() >= t:
                    w = (u, x, lowest(n1), *_take(v10, t), lowest(n0))
                    raise _Structural("vertex with >= t non-neighbours in V1", bg.g, f"F1_{t},1 (A)", w)
                A |= bit(x)
            elif n1:
                B1 |= bit(x)
            elif n0:
                B2 |= bit(x)
            else:
                A |= bit(x)
        return SplitStep(A, B1, B2)

    return split_nodes(bg, mask, provider, t - 1, True)


class _Complemented:
    """Lazily built bipartite complement shared by one scheme run."""

    def __init__(self, bg):
        self.bg = bg
        self._c = None

    def get(self):
        if self._c is None:
            self._c = bipartite_complement(self.bg)
        return self._c


def _ftt_nodes(bg, mask, t, full, comp_cache=None):
    """``full=False``: F1_{t,t}-free graphs; ``full=True``: F_{t,t}-free."""
    g, adj = bg.g, bg.adj
    name = f"F_{t},{t}" if full else f"F1_{t},{t}"
    if comp_cache is None:
        comp_cache = _Complemented(bg)

    def provider(_, cur):
        v = _max_degree(adj, cur, cur)
        layers = bfs_layer_masks(g, v, cur)
        comp = 0
        for lay in layers:
            comp |= lay
        V = layers + [0] * (6 - len(layers))
        V1, V2, V3 = V[1], V[2], V[3]
        for x in iter_bits(V2):
            nb3 = adj[x] & V3
            if nb3.bit_count() < t:
                continue
            base = (x, v, lowest(adj[x] & V1), *_take(nb3, t), *_take(V1 & ~adj[x], t))
            if not full:
                raise _Structural("V2 vertex with >= t neighbours in V3", g, name, base)
            non3 = V3 & ~adj[x]
            if non3:
                raise _Structural("V2 vertex with >= t neighbours and a non-neighbour in V3", g, name,
                                  base + (lowest(non3),))
            if V[5]:
                raise _Structural("V5 nonempty although a V2 vertex has >= t neighbours in V3", g, name,
                                  base + (lowest(V[5]),))
        A = bit(v) | V1 | V2
        inner = _ftt_inner(bg, v, V1, V2, t, full, comp_cache)
        return SplitStep(A, comp & ~A, cur & ~comp, inner)

    return split_nodes(bg, mask, provider, t - 1, full)


def _ftt_inner(bg, v, V1, V2, t, full, comp_cache):
    g, adj = bg.g, bg.adj
    name = f"F_{t},{t}" if full else f"F1_{t},{t}"
    A = bit(v) | V1 | V2
    if not V1:
        return cover_nodes(g, A, [(A, _star_nodes(v, 0))], 3)
    u = _max_degree(adj, V1, A)
    U = adj[u] & V2
    W = V2 & ~U
    V1p = V1 & ~bit(u)
    for x in iter_bits(V1p):
        nbw = adj[x] & W
        if nbw.bit_count() < t:
            continue
        base = (x, u, v, *_take(nbw, t), *_take(U & ~adj[x], t))
        if not full:
            raise _Structural("V1' vertex with >= t neighbours in W", g, name, base)
        non_w = W & ~adj[x]
        if non_w:
            raise _Structural("V1' vertex with >= t neighbours and a non-neighbour in W", g, name,
                              base + (lowest(non_w),))

    def side_provider(_, cur):
        a = cur & V1p
        return SplitStep(a if a else cur, cur & ~a if a else 0)

    pieces = [
        (bit(v) | V1, _star_nodes(v, V1)),
        (bit(u) | U, _star_nodes(u, U)),
        (V1p | W, split_nodes(bg, V1p | W, side_provider, t - 1, True)),
    ]
    last = V1p | U
    if full:
        cbg = comp_cache.get()
        inner = _ftt_nodes(cbg, last, t, False, _Complemented(cbg))
        pieces.append((last, {x: N.ComplementNode(bg.side(x), inner[x]) for x in iter_bits(last)}))
    else:
        pieces.append((last, _peel_nodes(bg, last, double_star_degree(t), _rule_default)))
    return cover_nodes(g, A, pieces, 3)


def _ft1_nodes(bg, mask, t, heavy):
    g = bg.g
    cbg = _Complemented(bg)
    pieces = []
    for comp in component_masks(g, mask):
        light = comp & ~heavy
        if not light:
            pieces.append((comp, _star_nodes(lowest(comp), 0)))
            continue
        v = lowest(light)
        layers = bfs_layer_masks(g, v, comp)
        V1 = layers[1] if len(layers) > 1 else 0
        pieces.append((bit(v) | V1, _star_nodes(v, V1)))
        if V1:
            g1 = V1 | (layers[2] if len(layers) > 2 else 0)
            inner = _f1t1_nodes(cbg.get(), g1, t, heavy)
            pieces.append((g1, {x: N.ComplementNode(bg.side(x), inner[x]) for x in iter_bits(g1)}))
        for i in range(2, len(layers) - 1):
            m = layers[i] | layers[i + 1]
            pieces.append((m, _f1t1_nodes(bg, m, t, heavy)))
    return cover_nodes(g, mask, pieces, 3)


def _partition_nodes(adj, parts):
    p = len(parts)
    masks = [sum(1 << x for x in part) for part in parts]
    ranks = {x: [0] * p for part in parts for x in part}
    for i in range(p):
        for j in range(i + 1, p):
            order = sorted(parts[i], key=lambda x: (-_deg(adj, x, masks[j]), x))
            r = {x: k + 1 for k, x in enumerate(order)}
            for x in parts[i]:
                ranks[x][j] = r[x]
            for y in parts[j]:
                ranks[y][i] = max((r[x] for x in iter_bits(adj[y] & masks[i])), default=0)
    out = {}
    for i, part in enumerate(parts):
        clique = 1 if any(adj[x] & masks[i] for x in part) else 0
        for x in part:
            out[x] = N.PartitionNode(i, clique, tuple(ranks[x]))
    return out


def _layer_pieces(bg, mask, root_fn, layer_fn, first_fn=None):
    """Root star plus one piece per consecutive pair of BFS layers, for every
    component of ``mask``."""
    pieces = []
    for comp in component_masks(bg.g, mask):
        v = root_fn(bg, comp)
        layers = bfs_layer_masks(bg.g, v, comp)
        V1 = layers[1] if len(layers) > 1 else 0
        pieces.append((bit(v) | V1, _star_nodes(v, V1)))
        for i in range(1, len(layers) - 1):
            m = layers[i] | layers[i + 1]
            fn = first_fn if (i == 1 and first_fn is not None) else layer_fn
            pieces.append((m, fn(bg, layers[i], layers[i + 1])))
    return pieces


def _root_max_degree(bg, comp):
    return _max_degree(bg.adj, comp, comp)


def _root_non_p5(bg, comp):
    verts = bits_list(comp)
    sub = bg.g.induced(verts)
    for i, v in enumerate(verts):
        if p5_through(sub, i) is None:
            return v
    raise _Structural("every vertex is the centre of an induced P5", None, None, tuple(verts))


def _s222_nodes(bg, mask, max_parts, budget):
    def layer(bg_, lo, hi):
        verts = bits_list(lo | hi)
        sub = bg_.g.induced(verts)
        w = contains_induced(sub, matching(3))
        if w is not None:
            raise _Structural("layer graph contains 3K2", None, None, tuple(verts[i] for i in w))
        try:
            parts = chain_partition(sub, max_parts, budget)
        except ChainPartitionExhausted as exc:
            raise ChainPartitionExhausted(max_parts, verts, exc.budget_hit) from None
        return _partition_nodes(bg_.adj, [[verts[i] for i in part] for part in parts])

    return cover_nodes(bg.g, mask, _layer_pieces(bg, mask, _root_max_degree, layer), 2)


def _dk_nodes(bg, mask, k):
    pieces = _layer_pieces(
        bg, mask, _root_non_p5,
        lambda b, lo, hi: _f1t1_nodes(b, lo | hi, k, lo),
        lambda b, lo, hi: _chain_nodes(b, lo, hi),
    )
    return cover_nodes(bg.g, mask, pieces, 2)


def _zk_nodes(bg, mask, k):
    if k == 1:
        for x in iter_bits(mask):
            if bg.adj[x] & mask:
                y = lowest(bg.adj[x] & mask)
                a, b = (x, y) if bg.side(x) == 0 else (y, x)
                raise _Structural("edge in a Z_1-free graph", bg.g, "Z_1", (a, b))
        return {x: N.EmptyNode() for x in iter_bits(mask)}
    if k == 2:
        return _biclique_nodes(bg, mask)
    pieces = _layer_pieces(
        bg, mask, _root_non_p5,
        lambda b, lo, hi: _zk_nodes(b, lo | hi, k - 1),
        lambda b, lo, hi: _chain_nodes(b, lo, hi),
    )
    return cover_nodes(bg.g, mask, pieces, 2)


# ------------------------------------------------------------------- bounds


def f1t1_bound(t: int) -> Bound:
    return split_bound(t - 1, EMPTY_BOUND)


def peel_bound(d: int) -> Bound:
    return split_bound(d, EMPTY_BOUND)


def f1tt_bound(t: int) -> Bound:
    inner = cover_bound([STAR_BOUND, STAR_BOUND, split_bound(t - 1, EMPTY_BOUND), peel_bound(double_star_degree(t))], 3)
    return split_bound(t - 1, inner)


def ftt_bound(t: int) -> Bound:
    inner = cover_bound([STAR_BOUND, STAR_BOUND, split_bound(t - 1, EMPTY_BOUND), complement_bound(f1tt_bound(t))], 3)
    return split_bound(t - 1, inner)


def ft1_bound(t: int) -> Bound:
    # a vertex can sit in two layer pieces of the same kind
    kinds = [STAR_BOUND, complement_bound(f1t1_bound(t)), f1t1_bound(t)]
    return cover_bound(kinds * 3, 3)


def s222_bound(max_parts: int = 8) -> Bound:
    return cover_bound([STAR_BOUND] + [partition_bound(max_parts)] * 2, 2)


def dk_bound(k: int) -> Bound:
    return cover_bound([STAR_BOUND, CHAIN_BOUND] + [f1t1_bound(k)] * 2, 2)


def zk_bound(k: int) -> Bound:
    if k == 1:
        return EMPTY_BOUND
    if k == 2:
        return BICLIQUE_BOUND
    return cover_bound([STAR_BOUND, CHAIN_BOUND] + [zk_bound(k - 1)] * 2, 2)


# ------------------------------------------------------------ public schemes


def _heavy_mask(bg, heavy_side):
    if heavy_side in ("A", 0):
        return bg.side_a, bg
    if heavy_side in ("B", 1):
        return bg.side_b, bg.swap()
    raise ValueError(f"heavy_side must be 'A' or 'B', got {heavy_side!r}")


def _valid(host, fb, w) -> bool:
    if w is None or not is_induced_embedding(host.g, fb.pattern, w):
        return False
    if fb.orientation == ONE_SIDED_A:
        ref = host
    elif fb.orientation == ONE_SIDED_B:
        ref = host.swap()
    else:
        return True
    pat = fb.pattern
    return all((pat.side_a >> i & 1) == (ref.side_a >> x & 1) for i, x in enumerate(w))


def _run(bg, spec, host, check, build):
    """Membership pre-check, then ``build()``; structural failures become a
    certified NotInClassError or a SchemeInvariantError."""
    if check:
        m = member(spec, host)
        if not m:
            raise NotInClassError(m.violation, m.witness, f"input is not in class {spec.name}")
    try:
        return build()
    except (_Structural, DecompositionError) as exc:
        detail = str(exc)
        cand = exc if isinstance(exc, _Structural) else None
        if cand is not None and cand.host is bg.g:
            for fb in spec.forbidden:
                if fb.name == cand.name and _valid(host, fb, cand.witness):
                    raise NotInClassError(fb.name, cand.witness, detail) from None
        m = member(spec, host)
        if not m:
            raise NotInClassError(m.violation, m.witness, detail) from None
        raise SchemeInvariantError(f"construction failed on an in-class graph: {detail}",
                                   getattr(exc, "witness", None)) from None


def _finish(bg, nodes, scheme, params, bound):
    return labeling_from_nodes(nodes, bg.n, scheme, params, bound)


def chain_scheme(bg, check: bool = True) -> Labeling:
    """Side A ranked by decreasing neighbourhood (1-based); a side B vertex
    stores the largest rank among its neighbours (0 if none)."""
    bg = check_bipartite_graph(bg)
    nodes = _run(bg, class_spec("chain"), bg, False, lambda: _chain_nodes(bg, bg.side_a, bg.side_b))
    return _finish(bg, nodes, "chain", {}, CHAIN_BOUND)


def biclique_union_scheme(bg, check: bool = True) -> Labeling:
    """(component id, side); isolated vertices share the null component 0."""
    bg = check_bipartite_graph(bg)
    nodes = _run(bg, class_spec("biclique-union"), bg, False, lambda: _biclique_nodes(bg, bg.g.vertices_mask))
    return _finish(bg, nodes, "biclique-union", {}, BICLIQUE_BOUND)


def peel_scheme(bg, d: int, rule: str | Callable = "default") -> Labeling:
    """Singleton split steps: each step removes a vertex chosen by ``rule``
    that has at most ``d`` neighbours or at most ``d`` opposite-side
    non-neighbours among the remaining vertices."""
    bg = check_bipartite_graph(bg)
    d = check_count(d, "d")
    fn = PEEL_RULES.get(rule) if isinstance(rule, str) else rule
    if fn is None:
        raise ValueError(f"unknown peel rule {rule!r}; known: {', '.join(PEEL_RULES)}")
    try:
        nodes = _peel_nodes(bg, bg.g.vertices_mask, d, fn)
    except _Structural as exc:
        raise DecompositionError(f"peel rule failed: {exc.detail}", exc.witness) from None
    name = rule if isinstance(rule, str) else getattr(rule, "__name__", "custom")
    return _finish(bg, nodes, "peel", {"d": d, "rule": name}, peel_bound(d))


def double_star_scheme(bg, t: int = 2, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    t = check_count(t, "t", 1)
    d = double_star_degree(t)
    nodes = _run(bg, class_spec("double-star-free", t=t), bg, check,
                 lambda: _peel_nodes(bg, bg.g.vertices_mask, d, _rule_default))
    return _finish(bg, nodes, "double-star-free", {"t": t, "d": d}, peel_bound(d))


def f1tt_scheme(bg, t: int = 2, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    t = check_count(t, "t", 1)
    nodes = _run(bg, class_spec("f1tt", t=t), bg, check, lambda: _ftt_nodes(bg, bg.g.vertices_mask, t, False))
    return _finish(bg, nodes, "f1tt", {"t": t}, f1tt_bound(t))


def ftt_scheme(bg, t: int = 2, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    t = check_count(t, "t", 1)
    nodes = _run(bg, class_spec("ftt", t=t), bg, check, lambda: _ftt_nodes(bg, bg.g.vertices_mask, t, True))
    return _finish(bg, nodes, "ftt", {"t": t}, ftt_bound(t))


def one_sided_f1t1_scheme(bg, t: int = 2, heavy_side="A", check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    t = check_count(t, "t", 1)
    heavy, host = _heavy_mask(bg, heavy_side)
    nodes = _run(bg, class_spec("one-sided-f1t1", t=t), host, check,
                 lambda: _f1t1_nodes(bg, bg.g.vertices_mask, t, heavy))
    return _finish(bg, nodes, "one-sided-f1t1", {"t": t, "heavy_side": str(heavy_side)}, f1t1_bound(t))


def one_sided_ft1_scheme(bg, t: int = 2, heavy_side="A", check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    t = check_count(t, "t", 1)
    heavy, host = _heavy_mask(bg, heavy_side)
    nodes = _run(bg, class_spec("one-sided-ft1", t=t), host, check,
                 lambda: _ft1_nodes(bg, bg.g.vertices_mask, t, heavy))
    return _finish(bg, nodes, "one-sided-ft1", {"t": t, "heavy_side": str(heavy_side)}, ft1_bound(t))


def s222_scheme(bg, max_parts: int = 8, budget: int = 1_000_000, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    max_parts = check_count(max_parts, "max_parts", 1)
    nodes = _run(bg, class_spec("s222-chordal"), bg, check,
                 lambda: _s222_nodes(bg, bg.g.vertices_mask, max_parts, budget))
    return _finish(bg, nodes, "s222", {"max_parts": max_parts}, s222_bound(max_parts))


def dk_scheme(bg, k: int = 3, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    k = check_count(k, "k", 1)
    nodes = _run(bg, class_spec("dk-chordal", k=k), bg, check, lambda: _dk_nodes(bg, bg.g.vertices_mask, k))
    return _finish(bg, nodes, "dk", {"k": k}, dk_bound(k))


def zk_scheme(bg, k: int = 3, check: bool = True) -> Labeling:
    bg = check_bipartite_graph(bg)
    k = check_count(k, "k", 1)
    nodes = _run(bg, class_spec("zk-chordal", k=k), bg, check, lambda: _zk_nodes(bg, bg.g.vertices_mask, k))
    return _finish(bg, nodes, "zk", {"k": k}, zk_bound(k))


# ----------------------------------------------------------------- registry


@dataclass(frozen=True)
class SchemeInfo:
    name: str
    build: Callable
    class_name: str
    params: tuple
    bound: Callable

    def class_spec(self, **kw):
        return class_spec(self.class_name, **{k: v for k, v in kw.items() if k in ("t", "k")})

    def run(self, bg, check=True, **kw):
        args = {k: kw[k] for k in self.params if k in kw}
        return self.build(bg, check=check, **args)

    def bound_for(self, **kw) -> Bound:
        return self.bound(**{k: kw[k] for k in self.params if k in kw and k != "heavy_side"})


SCHEMES = {
    "chain": SchemeInfo("chain", chain_scheme, "chain", (), lambda: CHAIN_BOUND),
    "biclique-union": SchemeInfo("biclique-union", biclique_union_scheme, "biclique-union", (), lambda: BICLIQUE_BOUND),
    "double-star-free": SchemeInfo("double-star-free", double_star_scheme, "double-star-free", ("t",),
                                   lambda t=2: peel_bound(double_star_degree(t))),
    "f1tt": SchemeInfo("f1tt", f1tt_scheme, "f1tt", ("t",), lambda t=2: f1tt_bound(t)),
    "ftt": SchemeInfo("ftt", ftt_scheme, "ftt", ("t",), lambda t=2: ftt_bound(t)),
    "one-sided-f1t1": SchemeInfo("one-sided-f1t1", one_sided_f1t1_scheme, "one-sided-f1t1", ("t", "heavy_side"),
                                 lambda t=2: f1t1_bound(t)),
    "one-sided-ft1": SchemeInfo("one-sided-ft1", one_sided_ft1_scheme, "one-sided-ft1", ("t", "heavy_side"),
                                lambda t=2: ft1_bound(t)),
    "s222": SchemeInfo("s222", s222_scheme, "s222-chordal", ("max_parts", "budget"),
                       lambda max_parts=8, budget=None: s222_bound(max_parts)),
    "dk": SchemeInfo("dk", dk_scheme, "dk-chordal", ("k",), lambda k=3: dk_bound(k)),
    "zk": SchemeInfo("zk", zk_scheme, "zk-chordal", ("k",), lambda k=3: zk_bound(k)),
}


def get_scheme(name: str) -> SchemeInfo:
    try:
        return SCHEMES[name]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; known: {', '.join(SCHEMES)}") from None


def constants_table() -> dict:
    """C_S for the standard parameter choices (the golden table)."""
    out = {}
    for name, info in SCHEMES.items():
        if "t" in info.params:
            for t in (1, 2, 3):
                out[f"{name}[t={t}]"] = info.bound_for(t=t).constant
        elif "k" in info.params:
            for k in (1, 2, 3, 4, 5):
                out[f"{name}[k={k}]"] = info.bound_for(k=k).constant
        else:
            out[name] = info.bound_for().constant
    return out
