"""Named verification suites.  Each returns a JSON-ready report with an
``ok`` flag and machine-readable witnesses for every failure."""
from __future__ import annotations

import random
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .exceptions import ImplicitRepError, NotBipartiteError, NotInClassError
from .factorial import count_labelled, count_labelled_naive, lemma1_check, x_layer_check, y_decode, y_encode, z_property_check
from .families import (
    BipartiteGraph,
    bipartite_classes,
    check_witness,
    class_spec,
    complete_bipartite,
    cycle,
    hypercube,
    member,
    path,
    random_caterpillar,
    random_chain,
    random_tree,
    repair,
    sample_in_class,
    universal_chain,
)
from .graph import bipartite_graph, bipartition, build_graph, component_masks, iter_bits
from .hypercube import hypercube_decode, hypercube_encode
from .labeling.core import verify_labeling
from .labeling.schemes import double_star_degree, get_scheme
from .parameters import contiguity, is_double_star_free, min_pair_sd, sd_graph

MAX_REPORTED = 20

# scheme configurations exercised by the correctness, budget and fault suites
SCHEME_CASES = (
    ("chain", {}),
    ("biclique-union", {}),
    ("double-star-free", {"t": 2}),
    ("double-star-free", {"t": 3}),
    ("f1tt", {"t": 2}),
    ("f1tt", {"t": 3}),
    ("ftt", {"t": 2}),
    ("ftt", {"t": 3}),
    ("one-sided-f1t1", {"t": 2}),
    ("one-sided-f1t1", {"t": 2, "heavy_side": "B"}),
    ("one-sided-ft1", {"t": 2}),
    ("one-sided-ft1", {"t": 2, "heavy_side": "B"}),
    ("s222", {}),
    ("dk", {"k": 2}),
    ("dk", {"k": 3}),
    ("zk", {"k": 3}),
    ("zk", {"k": 4}),
)

EDGE_PROBS = (0.1, 0.2, 0.3, 0.5, 0.7)


def _report(name: str, ok: bool, params: dict, failures: list, **extra) -> dict:
    out = {"suite": name, "ok": ok, "params": params}
    out.update(extra)
    out["failure_count"] = len(failures)
    out["failures"] = failures[:MAX_REPORTED]
    return out


def _case_id(name: str, kw: dict) -> str:
    if not kw:
        return name
    return name + "[" + ",".join(f"{k}={v}" for k, v in sorted(kw.items())) + "]"


# ------------------------------------------------------------------ corpora


def _orient(g: BipartiteGraph, kw: dict) -> BipartiteGraph:
    # samples are drawn with side A heavy; the B variant sees the mirror image
    return g.swap() if kw.get("heavy_side") == "B" else g


def _host(g: BipartiteGraph, kw: dict) -> BipartiteGraph:
    return g.swap() if kw.get("heavy_side") == "B" else g


def scheme_samples(name: str, kw: dict, samples: int = 200, seed: int = 0, n_max: int = 40):
    """Seeded in-class graphs: ``n`` uniform in 5..n_max, edge density from
    EDGE_PROBS, repaired into the class by witness deletion."""
    spec = get_scheme(name).class_spec(**kw)
    for i in range(samples):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(5, n_max)
        p = rng.choice(EDGE_PROBS)
        g = sample_in_class(spec, n, seed * 1_000_003 + i, edge_prob=p, mode="repair")
        yield _orient(g, kw)


def scheme_exhaustive(name: str, kw: dict, max_side: int = 4):
    """Every in-class bipartite graph with both sides of size <= max_side,
    up to side-preserving isomorphism, in both orientations."""
    spec = get_scheme(name).class_spec(**kw)
    for a in range(max_side + 1):
        for b in range(max_side + 1):
            if a + b == 0:
                continue
            for g in bipartite_classes(a, b):
                if member(spec, g).ok:
                    yield _orient(g, kw)


def _check_labeling(name, kw, g, failures, stats):
    info = get_scheme(name)
    try:
        lab = info.run(g, check=False, **kw)
    except ImplicitRepError as exc:
        failures.append({"case": _case_id(name, kw), "edges": g.edges(), "side_a": list(iter_bits(g.side_a)),
                         "error": exc.to_dict()})
        return
    rep = verify_labeling(g, lab)
    stats["graphs"] += 1
    stats["pairs"] += rep.pairs_checked
    stats["max_ratio"] = max(stats["max_ratio"], rep.ratio)
    stats["max_bits"] = max(stats["max_bits"], rep.max_bits)
    if not rep.ok or not rep.within_bound:
        failures.append({"case": _case_id(name, kw), "edges": g.edges(), "side_a": list(iter_bits(g.side_a)),
                         "report": rep.to_dict()})


def _scheme_case(name: str, kw: dict, samples: int, seed: int, max_side: int, n_max: int):
    bound = get_scheme(name).bound_for(**kw)
    stats = {"graphs": 0, "pairs": 0, "max_ratio": 0.0, "max_bits": 0}
    failures = []
    t0 = time.perf_counter()
    for g in scheme_samples(name, kw, samples, seed, n_max):
        _check_labeling(name, kw, g, failures, stats)
    for g in scheme_exhaustive(name, kw, max_side):
        _check_labeling(name, kw, g, failures, stats)
    stats["C"] = bound.constant
    stats["bound"] = [bound.a, bound.b]
    stats["seconds"] = round(time.perf_counter() - t0, 3)
    return stats, failures


def suite_schemes(samples: int = 200, seed: int = 0, max_side: int = 4, n_max: int = 40, only: str | None = None,
                  workers: int = 1) -> dict:
    """Every scheme configuration on seeded and exhaustive in-class corpora:
    zero decoding mismatches and payloads within a_S*w + b_S <= C_S*w."""
    cases = [(name, kw) for name, kw in SCHEME_CASES if only is None or name == only]
    args = [(name, kw, samples, seed, max_side, n_max) for name, kw in cases]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scheme_case, *zip(*args)))
    else:
        results = [_scheme_case(*a) for a in args]
    failures, per_case = [], {}
    for (name, kw), (stats, fails) in zip(cases, results):
        per_case[_case_id(name, kw)] = stats
        failures += fails
    return _report("schemes", not failures, {"samples": samples, "seed": seed, "max_side": max_side, "n_max": n_max},
                   failures, cases=per_case)


# ----------------------------------------------------------- fault injection


def _patterns(spec) -> list[tuple[str, BipartiteGraph]]:
    out = []
    for fb in spec.forbidden:
        pat = fb.pattern if isinstance(fb.pattern, BipartiteGraph) else bipartition(fb.pattern)
        if fb.orientation == "one-sided-B":
            pat = pat.swap()
        out.append((fb.name, pat))
    if spec.require_chordal_bipartite:
        out.append(("C6", bipartition(cycle(6))))
        out.append(("C8", bipartition(cycle(8))))
    return out


def plant(pattern: BipartiteGraph, base: BipartiteGraph, rng: random.Random, q: float) -> BipartiteGraph:
    """Disjoint union of ``pattern`` and ``base`` plus random cross edges that
    respect both bipartitions, vertex ids shuffled.  The pattern stays an
    induced, side-respecting subgraph."""
    k, m = pattern.n, base.n
    n = k + m
    perm = list(range(n))
    rng.shuffle(perm)
    side_a = [perm[v] for v in iter_bits(pattern.side_a)] + [perm[k + v] for v in iter_bits(base.side_a)]
    edges = [(perm[u], perm[v]) for u, v in pattern.edges()]
    edges += [(perm[k + u], perm[k + v]) for u, v in base.edges()]
    for u in range(k):
        for v in range(m):
            if pattern.side(u) != base.side(v) and rng.random() < q:
                edges.append((perm[u], perm[k + v]))
    return bipartite_graph(n, edges, side_a)


def _fault_cases(name: str, kw: dict, per_pattern: int, seed: int):
    spec = get_scheme(name).class_spec(**kw)
    for pname, pat in _patterns(spec):
        yield pname, "bare", pat
        for i in range(per_pattern):
            rng = random.Random(zlib.crc32(f"{seed}/{name}/{pname}/{i}".encode()))
            base = sample_in_class(spec, rng.randint(3, 20), rng.randrange(1 << 30),
                                   edge_prob=rng.choice(EDGE_PROBS), mode="repair")
            q = 0.0 if i % 3 == 0 else rng.choice((0.1, 0.3, 0.6))
            yield pname, ("disjoint" if q == 0 else "planted"), plant(pat, base, rng, q)


def suite_fault_injection(per_pattern: int = 6, seed: int = 0) -> dict:
    """Feed every scheme graphs containing its forbidden pattern.  With the
    membership check on, the scheme must raise a certified witness; with it
    off, it must either raise or produce labels whose verification result is
    reported.  Anything else is a silent mislabel."""
    failures, outcomes, total = [], {}, 0
    for name, kw in SCHEME_CASES:
        info = get_scheme(name)
        spec = info.class_spec(**kw)
        tally = {"certified": 0, "unchecked-raised": 0, "unchecked-verified": 0, "unchecked-verifier-failure": 0}
        for pname, how, g0 in _fault_cases(name, kw, per_pattern, seed):
            total += 1
            g = _orient(g0, kw)
            host = _host(g, kw)
            case = {"case": _case_id(name, kw), "pattern": pname, "how": how, "edges": g.edges(),
                    "side_a": list(iter_bits(g.side_a))}
            try:
                info.run(g, check=True, **kw)
                failures.append(dict(case, problem="accepted an input containing the pattern"))
                continue
            except NotInClassError as exc:
                if not check_witness(spec, host, exc.pattern, exc.witness):
                    failures.append(dict(case, problem="invalid witness", error=exc.to_dict()))
                    continue
                tally["certified"] += 1
            except ImplicitRepError as exc:
                failures.append(dict(case, problem="uncertified error", error=exc.to_dict()))
                continue
            try:
                lab = info.run(g, check=False, **kw)
            except NotInClassError as exc:
                if not check_witness(spec, host, exc.pattern, exc.witness):
                    failures.append(dict(case, problem="invalid witness (unchecked run)", error=exc.to_dict()))
                    continue
                tally["unchecked-raised"] += 1
                continue
            except ImplicitRepError:
                tally["unchecked-raised"] += 1
                continue
            rep = verify_labeling(g, lab)
            tally["unchecked-verified" if rep.ok else "unchecked-verifier-failure"] += 1
        outcomes[_case_id(name, kw)] = tally
    # non-bipartite input is rejected with an odd cycle before any scheme runs
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    for name, kw in SCHEME_CASES:
        total += 1
        try:
            get_scheme(name).run(tri, **kw)
            failures.append({"case": _case_id(name, kw), "pattern": "K3", "problem": "accepted a triangle"})
        except NotBipartiteError as exc:
            if not check_witness(class_spec("bipartite"), tri, "odd cycle", exc.witness):
                failures.append({"case": _case_id(name, kw), "pattern": "K3", "problem": "invalid odd cycle"})
    return _report("fault-injection", not failures, {"per_pattern": per_pattern, "seed": seed}, failures,
                   injected=total, outcomes=outcomes)


# --------------------------------------------------------- structural lemmas


def suite_lemma1(max_vertices: int = 8) -> dict:
    rep = lemma1_check(max_vertices)
    return _report("lemma1", rep["ok"], {"max_vertices": max_vertices}, rep["counterexamples"],
                   checked=rep["checked"], both_sides_true=rep["both_sides_true"])


def suite_lemma_degree_bound(max_side: int = 4, ts=(2, 3)) -> dict:
    """No unbalanced induced 2K_{1,t} implies a vertex of degree <= t-1 or of
    bi-codegree <= (t-1)(t^2-4t+5)."""
    failures, checked, free = [], 0, {}
    for t in ts:
        bound = (t - 1) * (t * t - 4 * t + 5)
        free[t] = 0
        for a in range(max_side + 1):
            for b in range(a, max_side + 1):
                if a + b == 0:
                    continue
                for g in bipartite_classes(a, b):
                    checked += 1
                    ok, _ = is_double_star_free(g, t)
                    if not ok:
                        continue
                    free[t] += 1
                    if not any(g.g.degree(v) <= t - 1 or g.bi_codegree(v) <= bound for v in range(g.n)):
                        failures.append({"t": t, "edges": g.edges(), "side_a": list(iter_bits(g.side_a))})
    return _report("lemma-degree-bound", not failures, {"max_side": max_side, "t": list(ts)}, failures,
                   checked=checked, double_star_free={str(k): v for k, v in free.items()},
                   formula={str(t): (t - 1) * (t * t - 4 * t + 5) for t in ts},
                   scheme_degree={str(t): double_star_degree(t) for t in ts})


def suite_ftt_sd(t: int = 2, max_side: int = 4, samples: int = 200, seed: int = 0, n_max: int = 40) -> dict:
    """F_{t,t}-free bipartite graphs have a pair with sd <= 2t."""
    spec = class_spec("ftt", t=t)
    limit = 2 * t
    failures, exhaustive, sampled = [], 0, 0
    for a in range(max_side + 1):
        for b in range(a, max_side + 1):
            if a + b < 2:
                continue
            for g in bipartite_classes(a, b):
                if not member(spec, g).ok:
                    continue
                exhaustive += 1
                rep = min_pair_sd(g)
                if rep.value > limit:
                    failures.append({"edges": g.edges(), "side_a": list(iter_bits(g.side_a)), "sd": rep.value})
    for i in range(samples):
        rng = random.Random(seed * 1_000_003 + i)
        g = sample_in_class(spec, rng.randint(5, n_max), seed * 1_000_003 + i,
                            edge_prob=rng.choice(EDGE_PROBS), mode="repair")
        if g.n < 2:
            continue
        sampled += 1
        rep = min_pair_sd(g)
        if rep.value > limit:
            failures.append({"edges": g.edges(), "side_a": list(iter_bits(g.side_a)), "sd": rep.value})
    return _report("ftt-sd", not failures, {"t": t, "max_side": max_side, "samples": samples, "seed": seed},
                   failures, exhaustive=exhaustive, sampled=sampled, limit=limit)


def atlas_graphs(max_n: int = 7):
    """All graphs on 2..max_n vertices up to isomorphism (networkx atlas)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError(f"the graph atlas stops at 7 vertices, got max_n={max_n}")
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= max_n:
            yield build_graph(h.number_of_nodes(), h.edges())


def suite_symdif_bounds(max_n: int = 7, shortcut: bool = False) -> dict:
    """sd(G) <= 2k for contiguity k.  With ``shortcut`` the order search is
    skipped when sd(G) <= 2 and G has an edge (then k >= 1 already)."""
    failures, checked, searched, largest = [], 0, 0, 0
    for g in atlas_graphs(max_n):
        checked += 1
        sd = sd_graph(g).value
        if shortcut and sd <= 2 and g.edge_count > 0:
            continue
        searched += 1
        k = contiguity(g).value
        largest = max(largest, k)
        if sd > 2 * k:
            failures.append({"n": g.n, "edges": g.edges(), "sd": sd, "contiguity": k})
    return _report("symdif-bounds", not failures, {"max_n": max_n, "shortcut": shortcut}, failures,
                   checked=checked, contiguity_searched=searched, max_contiguity=largest)


# ----------------------------------------------------------- peel encoders


def y_corpus(samples: int = 200, seed: int = 0, n_max: int = 40):
    """Repaired Y-free chordal samples; every fifth one starts from a chain
    graph next to a biclique so that twin (sd) steps occur too."""
    spec = class_spec("y-chordal")
    for i in range(samples):
        s = seed * 1_000_003 + i
        rng = random.Random(s)
        n = rng.randint(5, n_max)
        if i % 5 == 4:
            c = random_chain(max(2, n // 2), rng)
            k = rng.randint(5, 8)
            g = c.g.disjoint_union(complete_bipartite(k, k).g)
            yield repair(spec, bipartition(g))
        else:
            yield sample_in_class(spec, n, s, edge_prob=rng.choice((0.2, 0.5, 0.8)), mode="repair")


def suite_y_roundtrip(samples: int = 200, seed: int = 0, n_max: int = 40) -> dict:
    failures, kinds, longest = [], {"degree": 0, "sd": 0}, 0
    checked = 0
    for g in y_corpus(samples, seed, n_max):
        checked += 1
        try:
            rec = y_encode(g)
        except ImplicitRepError as exc:
            failures.append({"edges": g.edges(), "n": g.n, "error": exc.to_dict()})
            continue
        for s in rec.steps:
            kinds[s.kind] += 1
            if (s.kind == "degree" and len(s.vertices) > 4) or (s.kind == "sd" and len(s.vertices) > 6):
                failures.append({"edges": g.edges(), "n": g.n, "step": s.to_dict(), "problem": "step bound"})
        longest = max(longest, rec.max_list())
        back = y_decode(rec)
        plain = g.g if isinstance(g, BipartiteGraph) else g
        if back.adj != plain.adj:
            failures.append({"edges": plain.edges(), "n": g.n, "problem": "round trip differs"})
    return _report("y-roundtrip", not failures, {"samples": samples, "seed": seed, "n_max": n_max}, failures,
                   checked=checked, steps=kinds, longest_list=longest)


def tree_corpus(seed: int = 0, count: int = 40, n_max: int = 40):
    """Paths, random trees and caterpillars (all Z-, X- and Y-free)."""
    out = [path(n) for n in (12, 14, 15, 20, 30)]
    for i in range(count):
        rng = random.Random(seed * 7919 + i)
        n = rng.randint(10, n_max)
        out.append(random_tree(n, rng) if i % 2 else random_caterpillar(n, rng))
    return out


def suite_z_sd(samples: int = 40, seed: int = 0, n_max: int = 40) -> dict:
    spec = class_spec("z-chordal")
    corpus = tree_corpus(seed, samples, n_max)
    corpus += [universal_chain(k) for k in (3, 6, 8)]
    for i in range(samples):
        rng = random.Random(seed * 104729 + i)
        corpus.append(sample_in_class(spec, rng.randint(10, n_max), seed * 104729 + i,
                                      edge_prob=rng.choice((0.1, 0.2, 0.4)), mode="repair"))
    failures, with_p14 = [], 0
    for g in corpus:
        rep = z_property_check(g)
        if rep["status"] == "contains P14":
            with_p14 += 1
        if not rep["ok"]:
            failures.append({"edges": g.edges(), "n": g.n, "report": rep})
    return _report("z-sd", not failures, {"samples": samples, "seed": seed}, failures, checked=len(corpus),
                   containing_p14=with_p14)


def _largest_component(g: BipartiteGraph) -> BipartiteGraph:
    comps = component_masks(g.g)
    best = max(comps, key=lambda m: (m.bit_count(), -m))
    return g.induced(best)


def suite_x_layers(samples: int = 40, seed: int = 0, n_max: int = 40) -> dict:
    spec = class_spec("x-chordal")
    corpus = tree_corpus(seed, samples, n_max)
    corpus += [universal_chain(k) for k in (3, 6, 8)]
    for i in range(samples):
        rng = random.Random(seed * 15485863 + i)
        g = sample_in_class(spec, rng.randint(10, n_max), seed * 15485863 + i,
                            edge_prob=rng.choice((0.1, 0.2, 0.4)), mode="repair")
        corpus.append(_largest_component(g))
    failures, layers = [], 0
    for g in corpus:
        if g.n == 0:
            continue
        rep = x_layer_check(g)
        layers += rep["layers_checked"]
        if not rep["ok"]:
            failures.append({"edges": g.edges(), "n": g.n, "violations": rep["violations"][:3]})
    return _report("x-layers", not failures, {"samples": samples, "seed": seed}, failures, checked=len(corpus),
                   layers_checked=layers)


# --------------------------------------------------------- hypercube, speed


def suite_hypercube(samples: int = 100, seed: int = 0) -> dict:
    """Round trip on every induced subgraph of Q3 and on seeded induced
    subgraphs of Q4; codes are 2n integers in 1..n."""
    failures, checked = [], 0

    def one(g, tag):
        nonlocal checked
        checked += 1
        code = hypercube_encode(g)
        ok_shape = len(code.entries) == 2 * g.n and all(1 <= x <= g.n for x in code.entries)
        back = hypercube_decode(code)
        if not ok_shape or back.adj != g.adj:
            failures.append({"source": tag, "edges": g.edges(), "code": list(code.entries)})

    q3 = hypercube(3).g
    for sel in range(1 << 8):
        one(q3.induced(sel), f"Q3 subset {sel}")
    q4 = hypercube(4).g
    rng = random.Random(seed)
    for i in range(samples):
        sel = rng.randrange(1, 1 << 16)
        one(q4.induced(sel), f"Q4 subset {sel}")
    return _report("hypercube", not failures, {"samples": samples, "seed": seed}, failures, checked=checked)


SPEED_CLASSES = ("forest", "triangle-free", "bipartite", "chain", "biclique-union", "complete")


def suite_speed(max_n: int = 5, classes=SPEED_CLASSES) -> dict:
    """count_labelled against enumerate-all-then-filter."""
    failures, table = [], {}
    for name in classes:
        spec = class_spec(name)
        row = {}
        for n in range(max_n + 1):
            fast, naive = count_labelled(spec, n), count_labelled_naive(spec, n)
            row[str(n)] = fast
            if fast != naive:
                failures.append({"class": name, "n": n, "count_labelled": fast, "naive": naive})
        table[name] = row
    return _report("speed", not failures, {"max_n": max_n, "classes": list(classes)}, failures, counts=table)


SUITES: dict[str, Callable[..., dict]] = {
    "lemma1": suite_lemma1,
    "lemma-degree-bound": suite_lemma_degree_bound,
    "ftt-sd": suite_ftt_sd,
    "symdif-bounds": suite_symdif_bounds,
    "y-roundtrip": suite_y_roundtrip,
    "z-sd": suite_z_sd,
    "x-layers": suite_x_layers,
    "hypercube": suite_hypercube,
    "speed": suite_speed,
    "schemes": suite_schemes,
    "fault-injection": suite_fault_injection,
}


def run_suite(name: str, **options) -> dict:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    return fn(**options)
