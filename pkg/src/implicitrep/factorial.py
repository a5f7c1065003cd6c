"""Speed counting at small n, the forest/co-forest lemma check, and the peel
encoders for Y-, Z- and X-free chordal bipartite graphs."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import CapExceeded, NotInClassError, SchemeInvariantError
from .families import (
    ClassSpec,
    bipartite_classes,
    class_spec,
    f,
    member,
    path,
    spider,
)
from .graph import BipartiteGraph, Graph, bfs_layer_masks, bipartite_complement, bits_list, is_connected, is_forest, iter_bits
from .parameters import min_pair_sd
from .structure import contains_induced, contains_side_respecting

# ------------------------------------------------------------------ counting


def _graphs_on(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k in iter_bits(code):
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def count_labelled_naive(spec: ClassSpec, n: int) -> int:
    """Enumerate all 2^(n choose 2) graphs and filter."""
    return sum(1 for g in _graphs_on(n) if member(spec, g).ok)


def _extend(spec: ClassSpec, level: list) -> list:
    out = []
    for g in level:
        k = g.n
        for nb in range(1 << k):
            adj = list(g.adj)
            for u in iter_bits(nb):
                adj[u] |= 1 << k
            adj.append(nb)
            h = Graph(k + 1, tuple(adj))
            if member(spec, h).ok:
                out.append(h)
    return out


def count_labelled(spec: ClassSpec, n: int, cap: int = 8, workers: int = 1) -> int:
    """Exact number of labelled n-vertex members of a hereditary class.

    Members on ``0..k`` are grown from members on ``0..k-1`` by trying every
    neighbourhood of the new vertex; heredity guarantees nothing is missed.
    With ``workers > 1`` each level is split into contiguous chunks and the
    results are concatenated in order, so the count never depends on it.
    """
    if n > cap:
        raise CapExceeded("count_labelled n", n, cap)
    if n < 0:
        raise ValueError("n must be >= 0")
    level = [Graph(0, ())]
    for _ in range(n):
        if workers > 1 and len(level) >= 2 * workers:
            size = -(-len(level) // workers)
            chunks = [level[i:i + size] for i in range(0, len(level), size)]
            with ProcessPoolExecutor(workers) as pool:
                level = [h for part in pool.map(_extend, [spec] * len(chunks), chunks) for h in part]
        else:
            level = _extend(spec, level)
    return len(level)


@dataclass
class SpeedTable:
    spec: str
    counts: dict = field(default_factory=dict)

    def statistic(self, n: int) -> float | None:
        """log2(count) / (n log2 n), undefined for n < 2."""
        c = self.counts[n]
        if n < 2 or c < 1:
            return None
        return math.log2(c) / (n * math.log2(n))

    def rows(self):
        return [(n, c, self.statistic(n)) for n, c in sorted(self.counts.items())]

    def to_csv(self) -> str:
        lines = ["n,count"]
        lines += [f"{n},{c}" for n, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"


def speed_table(spec: ClassSpec, ns, cap: int = 8, workers: int = 1) -> SpeedTable:
    table = SpeedTable(spec.name)
    for n in ns:
        table.counts[n] = count_labelled(spec, n, cap, workers)
    return table


# --------------------------------------------------------------- lemma check


def lemma1_targets(max_vertices: int) -> list[tuple[str, BipartiteGraph]]:
    out = [("P7", path(7)), ("S_1,2,3", spider(1, 2, 3))]
    for t in range(1, max_vertices + 1):
        for p in range(t, max_vertices + 1 - t):
            out.append((f"F_{t},{p}", f(t, p)))
    return out


def lemma1_check(max_vertices: int = 8) -> dict:
    """Forest and co-forest (bipartite complement) versus side-respecting
    induced containment in P7, S_{1,2,3} or some F_{t,p}, over every
    bipartite graph on at most ``max_vertices`` vertices up to isomorphism and
    side swap."""
    if max_vertices > 9:
        raise CapExceeded("lemma1_check max_vertices", max_vertices, 9)
    targets = lemma1_targets(max_vertices)
    checked = both = 0
    counterexamples = []
    for n_a in range(0, max_vertices // 2 + 1):
        for n_b in range(n_a, max_vertices - n_a + 1):
            if n_a + n_b == 0:
                continue
            for h in bipartite_classes(n_a, n_b):
                checked += 1
                left = is_forest(h.g) and is_forest(bipartite_complement(h).g)
                host = None
                for name, tg in targets:
                    if tg.n < h.n:
                        continue
                    if contains_side_respecting(tg, h) is not None:
                        host = name
                        break
                right = host is not None
                if left and right:
                    both += 1
                if left != right:
                    counterexamples.append({
                        "n_a": n_a, "n_b": n_b, "edges": h.edges(),
                        "forest_and_coforest": left, "contained_in": host,
                    })
    return {
        "max_vertices": max_vertices,
        "checked": checked,
        "both_sides_true": both,
        "counterexamples": counterexamples,
        "ok": not counterexamples,
    }


# -------------------------------------------------------------- Y-free peel

Y_DEGREE_BOUND = 4
Y_SD_BOUND = 6


@dataclass(frozen=True)
class PeelStep:
    vertex: int
    kind: str  # "degree" or "sd"
    vertices: tuple  # neighbours, or the symmetric difference with the partner
    partner: int | None = None
    adjacent: bool = False

    def to_dict(self):
        return {"vertex": self.vertex, "kind": self.kind, "vertices": list(self.vertices),
                "partner": self.partner, "adjacent": self.adjacent}


@dataclass(frozen=True)
class PeelRecord:
    n: int
    steps: tuple

    def max_list(self) -> int:
        return max((len(s.vertices) for s in self.steps), default=0)

    def to_dict(self):
        return {"n": self.n, "steps": [s.to_dict() for s in self.steps]}


def _plain(g) -> Graph:
    return g.g if isinstance(g, BipartiteGraph) else g


def y_encode(g, check: bool = True, degree_bound: int = Y_DEGREE_BOUND, sd_bound: int = Y_SD_BOUND) -> PeelRecord:
    """Repeatedly delete the smallest vertex of degree <= 4 (recording its
    neighbours), else the first pair (x, y) with sd <= 6 (delete x, record
    y, the symmetric difference and whether x ~ y)."""
    if check:
        m = member(class_spec("y-chordal"), g)
        if not m:
            raise NotInClassError(m.violation, m.witness, "input is not Y-free chordal bipartite")
    g = _plain(g)
    adj = g.adj
    alive = g.vertices_mask
    steps = []
    while alive:
        step = None
        for v in iter_bits(alive):
            if (adj[v] & alive).bit_count() <= degree_bound:
                step = PeelStep(v, "degree", tuple(iter_bits(adj[v] & alive)))
                break
        if step is None:
            verts = bits_list(alive)
            for i, x in enumerate(verts):
                for y in verts[i + 1:]:
                    diff = (adj[x] ^ adj[y]) & alive & ~(1 << x) & ~(1 << y)
                    if diff.bit_count() <= sd_bound:
                        step = PeelStep(x, "sd", tuple(iter_bits(diff)), y, bool(adj[x] >> y & 1))
                        break
                if step is not None:
                    break
        if step is None:
            raise SchemeInvariantError("no vertex of small degree and no pair of small symmetric difference",
                                       tuple(iter_bits(alive)))
        steps.append(step)
        alive &= ~(1 << step.vertex)
    return PeelRecord(g.n, tuple(steps))


def y_decode(rec: PeelRecord) -> Graph:
    adj = [0] * rec.n
    present = 0
    for step in reversed(rec.steps):
        x = step.vertex
        if step.kind == "degree":
            nb = sum(1 << u for u in step.vertices)
        elif step.kind == "sd":
            y = step.partner
            nb = (adj[y] & ~(1 << x)) ^ sum(1 << u for u in step.vertices)
            if step.adjacent:
                nb |= 1 << y
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")
        if nb & ~present:
            raise ValueError(f"step for vertex {x} refers to vertices not yet restored")
        adj[x] = nb
        for u in iter_bits(nb):
            adj[u] |= 1 << x
        present |= 1 << x
    return Graph(rec.n, tuple(adj))


# ------------------------------------------------------------ Z and X checks


def z_property_check(g, check: bool = True) -> dict:
    """If ``g`` contains an induced P14 it must have a pair with sd <= 2."""
    if check:
        m = member(class_spec("z-chordal"), g)
        if not m:
            raise NotInClassError(m.violation, m.witness, "input is not Z-free chordal bipartite")
    g = _plain(g)
    w = contains_induced(g, path(14).g) if g.n >= 14 else None
    if w is None:
        return {"ok": True, "status": "P14-free", "pair": None, "sd": None}
    rep = min_pair_sd(g)
    return {"ok": rep.value <= 2, "status": "contains P14", "p14": list(w),
            "pair": list(rep.witness), "sd": rep.value}


def x_layer_check(g, roots=None, check: bool = True) -> dict:
    """Every layer graph G[V_i + V_{i+1}] (i >= 1) from each root is
    P12-free."""
    if check:
        m = member(class_spec("x-chordal"), g)
        if not m:
            raise NotInClassError(m.violation, m.witness, "input is not X-free chordal bipartite")
    g = _plain(g)
    if not is_connected(g):
        raise ValueError("x_layer_check needs a connected graph")
    p12 = path(12).g
    roots = range(g.n) if roots is None else roots
    violations = []
    layers_checked = 0
    for v in roots:
        layers = bfs_layer_masks(g, v)
        for i in range(1, len(layers) - 1):
            m = layers[i] | layers[i + 1]
            layers_checked += 1
            if m.bit_count() < 12:
                continue
            verts = bits_list(m)
            w = contains_induced(g.induced(verts), p12)
            if w is not None:
                violations.append({"root": v, "layer": i, "p12": [verts[j] for j in w]})
    return {"ok": not violations, "roots": len(list(roots)), "layers_checked": layers_checked,
            "violations": violations}


__all__ = [
    "count_labelled", "count_labelled_naive", "SpeedTable", "speed_table", "lemma1_check", "lemma1_targets",
    "PeelStep", "PeelRecord", "y_encode", "y_decode", "z_property_check", "x_layer_check"
]
