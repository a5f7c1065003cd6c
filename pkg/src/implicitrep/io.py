"""graph6 and JSON edge-list readers and writers."""
from __future__ import annotations

import json

from .exceptions import GraphError
from .graph import BipartiteGraph, Graph, bipartite_graph, build_graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g) -> str:
    if isinstance(g, BipartiteGraph):
        g = g.g
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    data = [
        sum(bits[k + s] << (5 - s) for s in range(6))
        for k in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + x) for x in _encode_n(g.n) + data)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphError("empty graph6 string", position=0)
    vals = []
    for i, ch in enumerate(s):
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise GraphError(f"invalid graph6 character {ch!r} at position {i}", position=i)
        vals.append(x)
    if vals[0] < 63:
        n, k = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size field", position=len(vals))
        n, k = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size field", position=len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        k = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[k:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need}", position=k)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    total_bits = need * 6
    while idx < total_bits:
        if body[idx // 6] >> (5 - idx % 6) & 1:
            raise GraphError("nonzero graph6 padding bits", position=k + idx // 6)
        idx += 1
    return Graph(n, tuple(adj))


def to_json_obj(g) -> dict:
    if isinstance(g, BipartiteGraph):
        return {
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "sides": [g.side(v) for v in range(g.n)],
        }
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def from_json_obj(obj: dict):
    try:
        n = int(obj["n"])
        edges = [tuple(e) for e in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    for pos, e in enumerate(edges):
        if len(e) != 2:
            raise GraphError(f"edge at position {pos} is not a pair", position=pos)
    sides = obj.get("sides")
    if sides is None:
        return build_graph(n, edges)
    if len(sides) != n or any(s not in (0, 1) for s in sides):
        raise GraphError("sides must list 0/1 for every vertex")
    return bipartite_graph(n, edges, [v for v in range(n) if sides[v] == 0])


def to_json(g) -> str:
    return json.dumps(to_json_obj(g))


def from_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}", position=exc.pos) from None
    return from_json_obj(obj)


def read_graph(text: str, fmt: str | None = None):
    """Parse graph6 or JSON; the format is sniffed when not given."""
    text = text.strip()
    if fmt is None:
        fmt = "json" if text.startswith("{") else "graph6"
    if fmt == "json":
        return from_json(text)
    if fmt == "graph6":
        return from_graph6(text.splitlines()[0] if text else "")
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "json":
        return to_json(g)
    raise ValueError(f"unknown graph format {fmt!r}")

