import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from implicitrep.exceptions import CapExceeded
from implicitrep.families import (
    CLASS_NAMES,
    FAMILIES,
    SamplingError,
    bipartite_classes,
    check_witness,
    class_spec,
    complement_is_forest,
    cycle,
    d_graph,
    enumerate_bipartite,
    f,
    f1,
    make,
    member,
    repair,
    sample_in_class,
    universal_chain,
    y_graph,
)
from implicitrep.graph import bipartite_complement, build_graph, components, is_forest
from implicitrep.structure import is_chain
from strategies import bipartite_graphs

C4_PLUS = ["x", "y", "z", "q", "a"]


def _iso(a, b):
    return nx.is_isomorphic(oracles.to_nx(a), oracles.to_nx(b))


class TestConstructors:
    def test_z5(self):
        z = make("zk", k=5)
        assert z.n == 10 and is_chain(z)
        assert z.degree(0) == 5  # a_1
        assert z.degree(9) == 5  # b_5

    def test_f1_22(self):
        g = make("f1", t=2, p=2)
        assert g.n == 7
        assert [g.degree(v) for v in range(g.n) if g.side_a >> v & 1] == [3, 3]

    def test_y_components(self):
        assert sorted(len(c) for c in components(make("y"))) == [3, 4]

    def test_f_adds_isolated_vertex_on_w_side(self):
        g = f(2, 3)
        assert g.n == f1(2, 3).n + 1
        last = g.n - 1
        assert g.degree(last) == 0 and g.side(last) == g.side(2)

    def test_copies(self):
        g = make("matching", k=1, copies=3)
        assert g.n == 6 and g.edge_count == 3

    @pytest.mark.parametrize("family, params", [("path", {}), ("cycle", {"n": 2}), ("zk", {"k": 0}),
                                                ("nope", {}), ("x", {"k": 1})])
    def test_bad_parameters(self, family, params):
        with pytest.raises(ValueError):
            make(family, **params)

    def test_every_family_builds(self):
        defaults = {"n": 4, "m": 3, "t": 2, "p": 2, "k": 2, "i": 1, "j": 2, "d": 3}
        for name, (_, names) in FAMILIES.items():
            g = make(name, **{p: defaults[p] for p in names})
            assert g.n > 0

    @pytest.mark.parametrize("t, p", [(1, 1), (2, 2), (2, 3), (3, 1), (4, 4)])
    def test_f_forest_and_coforest(self, t, p):
        g = f(t, p)
        assert is_forest(g.g) and oracles.is_forest(g)
        assert complement_is_forest(g)
        assert oracles.is_forest(build_graph(g.n, oracles.bipartite_complement_edges(g)))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_zk_chain(self, k):
        assert is_chain(universal_chain(k)) and oracles.is_chain(universal_chain(k))

    @pytest.mark.parametrize("name", ["dk"] + C4_PLUS)
    def test_single_c4_no_long_cycles(self, name):
        g = make(name, k=3) if name == "dk" else make(name)
        cycles = oracles.induced_cycles(g, 4)
        assert [len(c) for c in cycles] == [4]

    def test_descriptions(self):
        # Q: two pendants at one C4 vertex; A: pendants at two adjacent ones
        q, a = make("q"), make("a")
        assert sorted(q.degrees()) == [1, 1, 2, 2, 2, 4]
        assert sorted(a.degrees()) == [1, 1, 2, 2, 3, 3]
        assert a.has_edge(*[v for v in range(4) if a.degree(v) == 3])
        x, z = make("x"), make("z")
        assert sorted(x.degrees()) == [1, 1, 2, 2, 2, 3, 3]
        assert nx.diameter(oracles.to_nx(z)) == 5


class TestProofAssemblies:
    """The F_{t,p} shape is reconstructed from how proofs assemble it; check
    the three assemblies against the constructors."""

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_max_degree_layer_f1(self, t):
        # v ~ u, v ~ x; x ~ t vertices of W; u ~ t vertices of U
        v, u, x = 0, 1, 2
        edges = [(v, u), (v, x)]
        edges += [(x, 3 + i) for i in range(t)]
        edges += [(u, 3 + t + i) for i in range(t)]
        g = build_graph(3 + 2 * t, edges)
        assert _iso(g, f1(t, t))

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_max_degree_layer_f(self, t):
        # as above plus y in W, non-adjacent to x (and so to everything kept)
        v, u, x = 0, 1, 2
        edges = [(v, u), (v, x)]
        edges += [(x, 3 + i) for i in range(t)]
        edges += [(u, 3 + t + i) for i in range(t)]
        g = build_graph(4 + 2 * t, edges)
        assert _iso(g, f(t, t))
        # y sits on v's side, which is w's side in F
        bg = f(t, t)
        assert bg.side(bg.n - 1) == bg.side(2)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_layer_d_graph(self, k):
        # one-sided F1_{1,k}: a, b in V_i with common neighbour w, a has 1 leaf,
        # b has k; plus common neighbour c of a, b in V_{i-1} and its parent d
        a, b, w, c, d = 0, 1, 2, 3, 4
        edges = [(a, w), (b, w), (a, 5)] + [(b, 6 + i) for i in range(k)] + [(c, a), (c, b), (c, d)]
        g = build_graph(6 + k, edges)
        assert _iso(g, d_graph(k))


class TestEnumeration:
    @pytest.mark.parametrize("na, nb, count", [(1, 1, 2), (2, 2, 16), (3, 3, 512), (0, 3, 1)])
    def test_counts(self, na, nb, count):
        assert sum(1 for _ in enumerate_bipartite(na, nb)) == count

    def test_perfect_matchings(self):
        pm = [g for g in enumerate_bipartite(3, 3) if g.edge_count == 3 and all(d == 1 for d in g.degrees())]
        assert len(pm) == 6

    def test_lexicographic_order(self):
        gs = list(enumerate_bipartite(2, 2))
        assert gs[0].edge_count == 0 and gs[1].edges() == [(0, 2)] and gs[-1].edge_count == 4

    def test_cap(self):
        with pytest.raises(CapExceeded):
            next(enumerate_bipartite(6, 6))

    @pytest.mark.parametrize("na, nb", [(1, 2), (2, 2), (2, 3), (3, 3)])
    def test_classes_vs_networkx(self, na, nb):
        reps = bipartite_classes(na, nb)
        # distinct up to side-preserving isomorphism, and every graph covered
        def colored(g):
            h = oracles.to_nx(g)
            nx.set_node_attributes(h, {v: g.side(v) for v in range(g.n)}, "s")
            return h

        match = nx.algorithms.isomorphism.categorical_node_match("s", None)
        hs = [colored(g) for g in reps]
        for i in range(len(hs)):
            for j in range(i + 1, len(hs)):
                assert not nx.is_isomorphic(hs[i], hs[j], node_match=match)
        for g in enumerate_bipartite(na, nb):
            assert any(nx.is_isomorphic(colored(g), h, node_match=match) for h in hs)


class TestMembership:
    def test_f22_not_ftt_free(self):
        res = member(class_spec("ftt", t=2), f(2, 2))
        assert not res.ok and res.witness == tuple(range(f(2, 2).n))

    def test_c6_not_chordal(self):
        res = member(class_spec("chordal-bipartite"), cycle(6))
        assert not res.ok and check_witness(class_spec("chordal-bipartite"), cycle(6), res.violation, res.witness)

    def test_z5_s222_chordal(self):
        assert member(class_spec("s222-chordal"), universal_chain(5)).ok

    def test_odd_cycle_witness(self):
        spec = class_spec("chain")
        res = member(spec, cycle(5))
        assert res.violation == "odd cycle" and check_witness(spec, cycle(5), res.violation, res.witness)

    def test_forest_cycle_witness(self):
        spec = class_spec("forest")
        res = member(spec, cycle(6))
        assert res.violation == "cycle" and check_witness(spec, cycle(6), "cycle", res.witness)

    def test_y_in_biclique_union_fails(self):
        spec = class_spec("y-chordal")
        res = member(spec, y_graph())
        assert res.violation == "Y" and check_witness(spec, y_graph(), "Y", res.witness)

    def test_bad_witness_rejected(self):
        spec = class_spec("chain")
        g = make("matching", k=2)
        assert not check_witness(spec, g, "2K2", (0, 1, 2, 2))
        assert not check_witness(spec, g, "2K2", None)
        assert not check_witness(spec, g, "unknown", (0, 1, 2, 3))

    def test_one_sided_orientation(self):
        g = f1(2, 1)
        spec = class_spec("one-sided-f1t1", t=2)
        assert not member(spec, g).ok
        assert member(spec, g.swap()).ok

    def test_unknown_class(self):
        with pytest.raises(ValueError):
            class_spec("perfect")

    @settings(max_examples=40)
    @given(bipartite_graphs(max_n=8), st.sampled_from(["chain", "biclique-union", "ftt", "f1tt",
                                                        "chordal-bipartite", "double-star-free"]), st.data())
    def test_hereditary(self, bg, name, data):
        spec = class_spec(name)
        if not member(spec, bg).ok:
            return
        keep = data.draw(st.lists(st.sampled_from(range(bg.n)), unique=True)) if bg.n else []
        assert member(spec, bg.induced(sorted(keep))).ok

    @settings(max_examples=40)
    @given(bipartite_graphs(max_n=7))
    def test_chain_vs_oracle(self, bg):
        assert member(class_spec("chain"), bg).ok == oracles.is_chain(bg)

    @settings(max_examples=40)
    @given(bipartite_graphs(max_n=8))
    def test_ftt_vs_brute_force(self, bg):
        spec = class_spec("ftt", t=1)
        res = member(spec, bg)
        assert res.ok == (not oracles.contains(bg, f(1, 1)))
        if not res.ok:
            assert check_witness(spec, bg, res.violation, res.witness)


class TestSampling:
    def test_chain_sample(self):
        g = sample_in_class(class_spec("chain"), 8, seed=1)
        assert is_chain(g) and g.n == 8

    def test_single_vertex(self):
        for seed in range(5):
            assert sample_in_class(class_spec("ftt", t=2), 1, seed=seed).n == 1

    def test_deterministic(self):
        spec = class_spec("dk-chordal", k=2)
        assert sample_in_class(spec, 12, seed=7) == sample_in_class(spec, 12, seed=7)

    def test_repair_c6(self):
        spec = class_spec("chordal-bipartite")
        out = repair(spec, cycle(6))
        assert out.n == 5 and member(spec, out).ok

    def test_budget(self):
        with pytest.raises(SamplingError) as exc:
            sample_in_class(class_spec("complete"), 10, seed=0, edge_prob=0.1, attempts=3)
        assert exc.value.witness == 3

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_in_class(class_spec("chain"), 0, seed=0)
        with pytest.raises(ValueError):
            sample_in_class(class_spec("chain"), 3, seed=0, mode="magic")

    @pytest.mark.parametrize("name", CLASS_NAMES)
    def test_output_in_class(self, name):
        spec = class_spec(name)
        rng = random.Random(name)
        for _ in range(3):
            g = sample_in_class(spec, rng.randint(1, 12), seed=rng.randrange(1000), mode="repair")
            assert member(spec, g).ok


def test_complement_of_forest_pair():
    # 3K2 is a forest whose bipartite complement is C6
    g = make("matching", k=3)
    assert is_forest(g.g) and not is_forest(bipartite_complement(g).g)
