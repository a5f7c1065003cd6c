"""Label nodes: the bit codec and the pairwise adjacency rule.

Every node is written as a 4-bit kind tag followed by its body.  Integer
fields use the labeling width ``w`` (stored once in the descriptor), flags use
one bit.  A top-level label is ``(kind, body)``, so its payload is the body
alone.

Split ranges are stored as half-open ``[first, end)`` pairs of 0-based
indices, so that every stored value lies in ``0..n`` and fits in ``w`` bits.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import DecodeError, SameVertexError

TAG_BITS = 4
EMPTY, CHAIN, BICLIQUE, STAR, COVER, SPLIT, COMPLEMENT, PARTITION = range(8)
KIND_NAMES = ("empty", "chain", "biclique", "star", "cover", "split", "complement", "partition")
COUNT_BITS = 3  # cover entry count, so c <= 7

NEIGHBOURS, NON_NEIGHBOURS = 0, 1


@dataclass(frozen=True)
class EmptyNode:
    kind = EMPTY


@dataclass(frozen=True)
class ChainNode:
    side: int
    rank: int
    kind = CHAIN


@dataclass(frozen=True)
class BicliqueNode:
    comp: int
    side: int
    kind = BICLIQUE


@dataclass(frozen=True)
class StarNode:
    center: int
    kind = STAR


@dataclass(frozen=True)
class CoverNode:
    entries: tuple  # ((piece id, node), ...)
    kind = COVER


@dataclass(frozen=True)
class SplitNode:
    bip: int
    side: int
    index: int
    left: tuple
    right: tuple
    flag1: int
    list1: tuple
    flag2: int
    list2: tuple
    inner: object
    kind = SPLIT


@dataclass(frozen=True)
class ComplementNode:
    side: int
    inner: object
    kind = COMPLEMENT


@dataclass(frozen=True)
class PartitionNode:
    part: int
    clique: int
    ranks: tuple
    kind = PARTITION


# ------------------------------------------------------------------ encoding


class _Writer:
    def __init__(self, width: int):
        self.w = width
        self.parts: list[str] = []

    def bit(self, b):
        self.parts.append("1" if b else "0")

    def uint(self, x, bits=None):
        bits = self.w if bits is None else bits
        if not 0 <= x < (1 << bits):
            raise DecodeError(f"value {x} does not fit in {bits} bits")
        if bits:
            self.parts.append(format(x, f"0{bits}b"))

    def node(self, nd, tagged=True):
        if tagged:
            self.uint(nd.kind, TAG_BITS)
        k = nd.kind
        if k == EMPTY:
            return
        if k == CHAIN:
            self.bit(nd.side)
            self.uint(nd.rank)
        elif k == BICLIQUE:
            self.uint(nd.comp)
            self.bit(nd.side)
        elif k == STAR:
            self.bit(nd.center)
        elif k == COVER:
            self.uint(len(nd.entries), COUNT_BITS)
            for pid, inner in nd.entries:
                self.uint(pid)
                self.node(inner)
        elif k == SPLIT:
            self.bit(nd.bip)
            self.bit(nd.side)
            for x in (nd.index, *nd.left, *nd.right):
                self.uint(x)
            for flag, lst in ((nd.flag1, nd.list1), (nd.flag2, nd.list2)):
                self.bit(flag)
                self.uint(len(lst))
                for x in lst:
                    self.uint(x)
            self.node(nd.inner)
        elif k == COMPLEMENT:
            self.bit(nd.side)
            self.node(nd.inner)
        elif k == PARTITION:
            self.uint(nd.part)
            self.bit(nd.clique)
            self.uint(len(nd.ranks))
            for r in nd.ranks:
                self.uint(r)
        else:
            raise DecodeError(f"unknown node kind {k}")

    def getvalue(self) -> str:
        return "".join(self.parts)


def encode_body(node, width: int) -> str:
    wr = _Writer(width)
    wr.node(node, tagged=False)
    return wr.getvalue()


class _Reader:
    def __init__(self, bits: str, width: int):
        self.s = bits
        self.pos = 0
        self.w = width

    def uint(self, bits=None):
        bits = self.w if bits is None else bits
        end = self.pos + bits
        if end > len(self.s):
            raise DecodeError("label payload truncated")
        chunk = self.s[self.pos:end]
        self.pos = end
        return int(chunk, 2) if bits else 0

    def bit(self):
        return self.uint(1)

    def node(self, kind=None):
        if kind is None:
            kind = self.uint(TAG_BITS)
        if kind == EMPTY:
            return EmptyNode()
        if kind == CHAIN:
            side = self.bit()
            return ChainNode(side, self.uint())
        if kind == BICLIQUE:
            comp = self.uint()
            return BicliqueNode(comp, self.bit())
        if kind == STAR:
            return StarNode(self.bit())
        if kind == COVER:
            count = self.uint(COUNT_BITS)
            entries = []
            for _ in range(count):
                pid = self.uint()
                entries.append((pid, self.node()))
            return CoverNode(tuple(entries))
        if kind == SPLIT:
            bip, side = self.bit(), self.bit()
            index = self.uint()
            left = (self.uint(), self.uint())
            right = (self.uint(), self.uint())
            lists = []
            for _ in range(2):
                flag = self.bit()
                ln = self.uint()
                lists.append((flag, tuple(self.uint() for _ in range(ln))))
            inner = self.node()
            return SplitNode(bip, side, index, left, right, lists[0][0], lists[0][1], lists[1][0], lists[1][1], inner)
        if kind == COMPLEMENT:
            side = self.bit()
            return ComplementNode(side, self.node())
        if kind == PARTITION:
            part = self.uint()
            clique = self.bit()
            count = self.uint()
            return PartitionNode(part, clique, tuple(self.uint() for _ in range(count)))
        raise DecodeError(f"unknown node kind {kind}")


def decode_body(kind: int, bits: str, width: int):
    if any(ch not in "01" for ch in bits):
        raise DecodeError("payload must be a bit string")
    rd = _Reader(bits, width)
    node = rd.node(kind)
    if rd.pos != len(bits):
        raise DecodeError(f"{len(bits) - rd.pos} trailing bits in label payload")
    return node


# ----------------------------------------------------------------- adjacency


def adjacent(x, y) -> bool:
    """Adjacency of two vertices from their (parsed) label nodes."""
    k = x.kind
    if k != y.kind:
        raise DecodeError(f"label kinds differ: {KIND_NAMES[k]} vs {KIND_NAMES[y.kind]}")
    if k == EMPTY:
        return False
    if k == CHAIN:
        if x.side == y.side:
            if x.side == 0 and x.rank == y.rank:
                raise SameVertexError("equal chain ranks on side A")
            return False
        a, b = (x, y) if x.side == 0 else (y, x)
        return a.rank <= b.rank
    if k == BICLIQUE:
        return x.comp == y.comp and x.comp != 0 and x.side != y.side
    if k == STAR:
        return x.center != y.center
    if k == COVER:
        mine = dict(x.entries)
        for pid, node in y.entries:
            other = mine.get(pid)
            if other is not None and adjacent(other, node):
                return True
        return False
    if k == SPLIT:
        return _split_adjacent(x, y)
    if k == COMPLEMENT:
        return x.side != y.side and not adjacent(x.inner, y.inner)
    if k == PARTITION:
        if x.part == y.part:
            return bool(x.clique)
        if max(x.part, y.part) >= min(len(x.ranks), len(y.ranks)):
            raise DecodeError("partition labels disagree on the number of parts")
        a, b = (x, y) if x.part < y.part else (y, x)
        return a.ranks[b.part] <= b.ranks[a.part]
    raise DecodeError(f"unknown node kind {k}")


def _lookup(x, y):
    for (first, end), flag, lst in ((x.left, x.flag1, x.list1), (x.right, x.flag2, x.list2)):
        if first <= y.index < end:
            if flag == NEIGHBOURS:
                return y.index in lst
            if x.bip and x.side == y.side:
                return False
            return y.index not in lst
    return None


def _split_adjacent(x, y) -> bool:
    if x.index == y.index:
        raise SameVertexError(f"both labels carry index {x.index}")
    if x.bip != y.bip:
        raise DecodeError("split labels disagree on bipartite mode")
    if x.left == y.left and x.right == y.right:
        return adjacent(x.inner, y.inner)
    r = _lookup(x, y)
    if r is None:
        r = _lookup(y, x)
    return bool(r)
