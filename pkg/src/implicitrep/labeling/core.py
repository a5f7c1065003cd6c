"""Labels, labelings, the universal decoder, the verifier and the two generic
combinators (locally bounded covers and recursive splits)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from ..exceptions import DecodeError, DecompositionError
from ..graph import BipartiteGraph, Graph, iter_bits, mask_of
from . import nodes as N

# ---------------------------------------------------------------- bit budget


class Bound(NamedTuple):
    """Payload size ``a*w + b`` bits for width ``w``."""

    a: int
    b: int

    def bits(self, width: int) -> int:
        return self.a * width + self.b

    @property
    def constant(self) -> int:
        # valid for every w >= 1
        return self.a + self.b


EMPTY_BOUND = Bound(0, 0)
STAR_BOUND = Bound(0, 1)
CHAIN_BOUND = Bound(1, 1)
BICLIQUE_BOUND = Bound(1, 1)


def partition_bound(max_parts: int) -> Bound:
    return Bound(max_parts + 2, 1)


def complement_bound(inner: Bound) -> Bound:
    return Bound(inner.a, inner.b + 1 + N.TAG_BITS)


def split_bound(d: int, inner: Bound) -> Bound:
    return Bound(7 + 2 * d + inner.a, 4 + N.TAG_BITS + inner.b)


def cover_bound(pieces: list[Bound], c: int) -> Bound:
    """Worst case over any ``c`` entries (componentwise maxima)."""
    top_a = sorted((p.a for p in pieces), reverse=True)[:c]
    top_b = sorted((p.b for p in pieces), reverse=True)[:c]
    return Bound(sum(1 + a for a in top_a), N.COUNT_BITS + sum(N.TAG_BITS + b for b in top_b))


def width_for(n: int) -> int:
    """ceil(log2(n+1)), at least 1."""
    return max(1, n.bit_length())


# ------------------------------------------------------------ label objects


@dataclass(frozen=True)
class Label:
    kind: int
    payload: str

    @property
    def bits(self) -> int:
        return len(self.payload)

    def tagged(self) -> str:
        return format(self.kind, f"0{N.TAG_BITS}b") + self.payload

    def to_hex(self) -> str:
        s = self.tagged()
        s += "0" * (-len(s) % 4)
        return "".join(format(int(s[i:i + 4], 2), "x") for i in range(0, len(s), 4))

    @classmethod
    def from_hex(cls, text: str, nbits: int) -> "Label":
        """``nbits`` counts the tagged string (tag plus payload)."""
        try:
            s = "".join(format(int(ch, 16), "04b") for ch in text)
        except ValueError:
            raise DecodeError(f"invalid hex label {text!r}") from None
        if nbits < N.TAG_BITS or nbits > len(s):
            raise DecodeError(f"bit count {nbits} does not match hex label {text!r}")
        if "1" in s[nbits:]:
            raise DecodeError("nonzero padding in hex label")
        return cls(int(s[:N.TAG_BITS], 2), s[N.TAG_BITS:nbits])

    def node(self, width: int):
        return N.decode_body(self.kind, self.payload, width)


def make_label(node, width: int) -> Label:
    return Label(node.kind, N.encode_body(node, width))


def decode_adjacent(a: Label, b: Label, width: int) -> bool:
    """Adjacency of the two labelled vertices; a pure function of the labels
    and the shared width."""
    if a.kind != b.kind:
        raise DecodeError(f"scheme tag mismatch: {a.kind} vs {b.kind}")
    return N.adjacent(a.node(width), b.node(width))


@dataclass(frozen=True, eq=False)
class Labeling:
    labels: tuple
    scheme: str
    params: dict
    width: int
    bound: Bound
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def constant(self) -> int:
        return self.bound.constant

    @property
    def max_payload_bits(self) -> int:
        return max((lab.bits for lab in self.labels), default=0)

    def node(self, v: int):
        nd = self._cache.get(v)
        if nd is None:
            nd = self.labels[v].node(self.width)
            self._cache[v] = nd
        return nd

    def adjacent(self, u: int, v: int) -> bool:
        return N.adjacent(self.node(u), self.node(v))

    def descriptor(self) -> dict:
        return {
            "scheme": self.scheme,
            "params": dict(self.params),
            "width": self.width,
            "bound": {"a": self.bound.a, "b": self.bound.b, "C": self.constant},
        }

    def to_json_obj(self) -> dict:
        out = self.descriptor()
        out["labels"] = [lab.to_hex() for lab in self.labels]
        out["bits"] = [N.TAG_BITS + lab.bits for lab in self.labels]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Labeling":
        try:
            labels = tuple(Label.from_hex(h, nb) for h, nb in zip(obj["labels"], obj["bits"], strict=True))
            bound = obj.get("bound", {})
            return cls(labels, obj["scheme"], dict(obj.get("params", {})), int(obj["width"]),
                       Bound(int(bound.get("a", 0)), int(bound.get("b", 0))))
        except (KeyError, TypeError, ValueError) as exc:
            raise DecodeError(f"malformed labeling JSON: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DecodeError(f"invalid JSON: {exc}") from None
        return cls.from_json_obj(obj)


def labeling_from_nodes(nodes, n: int, scheme: str, params: dict, bound: Bound, width: int | None = None) -> Labeling:
    if width is None:
        width = width_for(n)
    if isinstance(nodes, dict):
        nodes = [nodes[v] for v in range(n)]
    labels = tuple(make_label(nd, width) for nd in nodes)
    lab = Labeling(labels, scheme, dict(params), width, bound)
    for v, nd in enumerate(nodes):
        lab._cache[v] = nd
    return lab


# ---------------------------------------------------------------- verifier


@dataclass(frozen=True)
class VerificationReport:
    n: int
    pairs_checked: int
    mismatches: tuple
    decode_errors: tuple
    max_bits: int
    width: int
    bound_bits: int

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.decode_errors

    @property
    def ratio(self) -> float:
        return self.max_bits / self.width if self.width else 0.0

    @property
    def within_bound(self) -> bool:
        return self.max_bits <= self.bound_bits

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "mismatches": [list(m) for m in self.mismatches],
            "decode_errors": [list(e) for e in self.decode_errors],
            "max_payload_bits": self.max_bits,
            "width": self.width,
            "ratio": self.ratio,
            "bound_bits": self.bound_bits,
            "within_bound": self.within_bound,
        }


def verify_labeling(g, lab: Labeling) -> VerificationReport:
    """Check every pair against the decoder.  Never raises on bad labels:
    undecodable labels and decoder errors are reported instead."""
    g = g.g if isinstance(g, BipartiteGraph) else g
    if lab.n != g.n:
        raise ValueError(f"labeling has {lab.n} labels for {g.n} vertices")
    # parse against the raw labels so that tampering is always seen
    parsed, errors = [], []
    for v, label in enumerate(lab.labels):
        try:
            parsed.append(label.node(lab.width))
        except DecodeError as exc:
            parsed.append(None)
            errors.append((v, str(exc)))
    mismatches = []
    pairs = 0
    for u in range(g.n):
        row = g.adj[u]
        pu = parsed[u]
        for v in range(u + 1, g.n):
            pairs += 1
            expected = bool(row >> v & 1)
            pv = parsed[v]
            if pu is None or pv is None:
                mismatches.append((u, v, expected))
                continue
            try:
                got = N.adjacent(pu, pv)
            except DecodeError:
                mismatches.append((u, v, expected))
                continue
            if got != expected:
                mismatches.append((u, v, expected))
    return VerificationReport(
        g.n, pairs, tuple(mismatches), tuple(errors), lab.max_payload_bits, width_for(g.n),
        lab.bound.bits(width_for(g.n)),
    )


# ------------------------------------------------------------------- cover


def cover_nodes(g: Graph, mask: int, pieces, c: int, check: bool = True) -> dict:
    """``pieces`` is a list of ``(vertex mask, {v: node})``; piece ids are list
    positions.  Returns ``{v: CoverNode}`` for every vertex of ``mask``."""
    if not 1 <= c <= (1 << N.COUNT_BITS) - 1:
        raise ValueError(f"cover multiplicity c must be in 1..{(1 << N.COUNT_BITS) - 1}")
    entries: dict[int, list] = {v: [] for v in iter_bits(mask)}
    for pid, (pmask, pnodes) in enumerate(pieces):
        if pmask & ~mask:
            raise DecompositionError(f"piece {pid} has vertices outside the graph", tuple(iter_bits(pmask & ~mask)))
        for v in iter_bits(pmask):
            entries[v].append((pid, pnodes[v]))
    if check:
        for v, ent in entries.items():
            if not ent:
                raise DecompositionError(f"vertex {v} is not covered by any piece", (v,))
            if len(ent) > c:
                raise DecompositionError(f"vertex {v} lies in {len(ent)} > c={c} pieces", (v,))
        for u in iter_bits(mask):
            for v in iter_bits(g.adj[u] & mask & ~((2 << u) - 1)):
                mine = dict(entries[u])
                if not any(pid in mine and N.adjacent(mine[pid], nd) for pid, nd in entries[v]):
                    raise DecompositionError(f"uncovered edge ({u},{v})", (u, v))
    return {v: N.CoverNode(tuple(ent)) for v, ent in entries.items()}


def cover_scheme(g, pieces, c: int) -> Labeling:
    """Combine labelings of pieces ``(vertex set, Labeling)`` covering ``g``;
    label ``i`` of a piece labeling belongs to the ``i``-th smallest vertex of
    its set."""
    gg = g.g if isinstance(g, BipartiteGraph) else g
    internal, bounds = [], []
    for verts, lab in pieces:
        vs = sorted(verts)
        if len(vs) != lab.n:
            raise DecompositionError(f"piece has {len(vs)} vertices but {lab.n} labels", tuple(vs))
        internal.append((mask_of(vs), {v: lab.node(i) for i, v in enumerate(vs)}))
        bounds.append(lab.bound)
    nodes = cover_nodes(gg, gg.vertices_mask, internal, c)
    return labeling_from_nodes(nodes, gg.n, "cover", {"c": c}, cover_bound(bounds, c))


# ------------------------------------------------------------------- split


@dataclass
class SplitStep:
    """One decomposition step: vertex masks A, B1, B2 and optionally the
    node map labelling G[A]."""

    A: int
    B1: int = 0
    B2: int = 0
    inner: dict | None = None


def _as_mask(x) -> int:
    if isinstance(x, int):
        return x
    return mask_of(x)


def _edgeless_nodes(g: Graph, a_mask: int) -> dict:
    for v in iter_bits(a_mask):
        if g.adj[v] & a_mask:
            u = next(iter_bits(g.adj[v] & a_mask))
            raise DecompositionError(f"G[A] is not edgeless: edge ({v},{u})", (v, u))
    return {v: N.EmptyNode() for v in iter_bits(a_mask)}


def _flag_for(g: Graph, x: int, target: int, index: dict, d: int, what: str):
    nb = g.adj[x] & target
    non = target & ~g.adj[x]
    cn, cnn = nb.bit_count(), non.bit_count()
    if cn <= d and cn <= cnn:
        return N.NEIGHBOURS, tuple(sorted(index[v] for v in iter_bits(nb)))
    if cnn <= d:
        return N.NON_NEIGHBOURS, tuple(sorted(index[v] for v in iter_bits(non)))
    if cn <= d:
        return N.NEIGHBOURS, tuple(sorted(index[v] for v in iter_bits(nb)))
    raise DecompositionError(
        f"vertex {x} has {cn} neighbours and {cnn} non-neighbours in {what}, both above d={d}",
        (x,) + tuple(iter_bits(nb)),
    )


def split_nodes(g, mask: int, provider: Callable, d: int, bipartite_mode: bool,
                inner_fn: Callable | None = None) -> dict:
    """Recursive split labeling of ``G[mask]``.

    ``provider(g, mask)`` returns a SplitStep for the induced subgraph on
    ``mask``.  A receives the middle index block of the current range, B1
    the low block and B2 the high block; both are labelled recursively.
    """
    bg = g if isinstance(g, BipartiteGraph) else None
    gg = g.g if bg is not None else g
    if bipartite_mode and bg is None:
        raise ValueError("bipartite mode needs a BipartiteGraph")
    total = mask.bit_count()
    steps = []
    index: dict[int, int] = {}
    stack = [(mask, 0, total)]
    while stack:
        cur, lo, hi = stack.pop()
        if not cur:
            continue
        if len(steps) >= total:
            raise DecompositionError("split recursion exceeded n steps", tuple(iter_bits(cur)))
        step = provider(g, cur)
        A, B1, B2 = _as_mask(step.A), _as_mask(step.B1), _as_mask(step.B2)
        if not A:
            raise DecompositionError("decomposition returned an empty A", tuple(iter_bits(cur)))
        if A & B1 or A & B2 or B1 & B2 or (A | B1 | B2) != cur:
            raise DecompositionError("A, B1, B2 do not partition the vertex set", tuple(iter_bits(cur)))
        for u in iter_bits(B1):
            if gg.adj[u] & B2:
                v = next(iter_bits(gg.adj[u] & B2))
                raise DecompositionError(f"edge ({u},{v}) between B1 and B2", (u, v))
        n1, n2 = B1.bit_count(), B2.bit_count()
        for i, v in enumerate(iter_bits(A)):
            index[v] = lo + n1 + i
        steps.append((A, B1, B2, lo, hi, n1, n2, step.inner))
        stack.append((B2, hi - n2, hi))
        stack.append((B1, lo, lo + n1))
    out = {}
    bip = 1 if bipartite_mode else 0
    for A, B1, B2, lo, hi, n1, n2, inner in steps:
        if inner is None:
            inner = inner_fn(g, A) if inner_fn is not None else _edgeless_nodes(gg, A)
        left = (lo, lo + n1)
        right = (hi - n2, hi)
        for x in iter_bits(A):
            t1, t2 = B1, B2
            if bipartite_mode:
                opp = bg.opposite(x)
                t1, t2 = B1 & opp, B2 & opp
            f1, l1 = _flag_for(gg, x, t1, index, d, "B1")
            f2, l2 = _flag_for(gg, x, t2, index, d, "B2")
            side = bg.side(x) if bg is not None else 0
            out[x] = N.SplitNode(bip, side, index[x], left, right, f1, l1, f2, l2, inner[x])
    return out


def split_scheme(g, decompose: Callable, d: int, bipartite_mode: bool = False,
                 inner: Callable | None = None, inner_bound: Bound = EMPTY_BOUND) -> Labeling:
    """Public split combinator.  ``decompose(g, vertices)`` gets the current
    vertex set as a frozenset and returns a SplitStep (sets or masks);
    ``inner(g, A)`` returns ``{v: node}`` for G[A] (default: G[A] must be
    edgeless)."""
    gg = g.g if isinstance(g, BipartiteGraph) else g

    def provider(graph, cur):
        return decompose(graph, frozenset(iter_bits(cur)))

    inner_fn = None
    if inner is not None:
        def inner_fn(graph, a_mask):
            return inner(graph, frozenset(iter_bits(a_mask)))

    nodes = split_nodes(g, gg.vertices_mask, provider, d, bipartite_mode, inner_fn)
    params = {"d": d, "bipartite_mode": bipartite_mode}
    return labeling_from_nodes(nodes, gg.n, "split", params, split_bound(d, inner_bound))
