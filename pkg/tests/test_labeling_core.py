import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from implicitrep.exceptions import DecodeError, DecompositionError, SameVertexError
from implicitrep.families import path, star, universal_chain
from implicitrep.graph import bipartite_graph, build_graph, component_masks, iter_bits
from implicitrep.labeling import nodes as N
from implicitrep.labeling.core import (
    Bound,
    Label,
    Labeling,
    SplitStep,
    cover_scheme,
    decode_adjacent,
    make_label,
    split_nodes,
    split_scheme,
    verify_labeling,
    width_for,
)
from implicitrep.labeling.schemes import chain_scheme
from strategies import bipartite_graphs


def edge():
    return bipartite_graph(2, [(0, 1)], [0])


class TestDecode:
    def test_chain_labels(self):
        w = 4
        a2 = make_label(N.ChainNode(0, 2), w)
        b3 = make_label(N.ChainNode(1, 3), w)
        assert decode_adjacent(a2, b3, w)
        assert not decode_adjacent(make_label(N.ChainNode(0, 4), w), b3, w)

    def test_same_side_non_adjacent(self):
        w = 4
        assert not decode_adjacent(make_label(N.ChainNode(0, 1), w), make_label(N.ChainNode(0, 2), w), w)

    def test_same_vertex(self):
        w = 4
        a = make_label(N.ChainNode(0, 2), w)
        with pytest.raises(SameVertexError):
            decode_adjacent(a, a, w)

    def test_tag_mismatch(self):
        with pytest.raises(DecodeError):
            decode_adjacent(make_label(N.ChainNode(0, 1), 3), make_label(N.StarNode(1), 3), 3)

    def test_malformed_payload(self):
        with pytest.raises(DecodeError):
            Label(N.CHAIN, "1").node(4)

    def test_width(self):
        assert [width_for(n) for n in (0, 1, 2, 3, 4, 7, 8)] == [1, 1, 2, 2, 3, 3, 4]

    def test_hex_round_trip(self):
        lab = make_label(N.ChainNode(1, 5), 3)
        back = Label.from_hex(lab.to_hex(), N.TAG_BITS + lab.bits)
        assert back == lab

    @pytest.mark.parametrize("text, nbits", [("zz", 8), ("f", 9), ("ff", 5), ("f", 2)])
    def test_hex_errors(self, text, nbits):
        with pytest.raises(DecodeError):
            Label.from_hex(text, nbits)


class TestVerify:
    def test_z5(self):
        z5 = universal_chain(5)
        rep = verify_labeling(z5, chain_scheme(z5))
        assert rep.ok and rep.pairs_checked == 45 and not rep.mismatches
        assert rep.within_bound

    def test_single_vertex(self):
        g = bipartite_graph(1, [], [0])
        rep = verify_labeling(g, chain_scheme(g))
        assert rep.ok and rep.pairs_checked == 0

    def test_tampering_hits_only_the_tampered_vertex(self):
        p4 = path(4)
        lab = chain_scheme(p4)
        hit = False
        for v in range(4):
            label = lab.labels[v]
            for i in range(label.bits):
                flipped = label.payload[:i] + ("1" if label.payload[i] == "0" else "0") + label.payload[i + 1:]
                labels = list(lab.labels)
                labels[v] = Label(label.kind, flipped)
                bad = Labeling(tuple(labels), lab.scheme, lab.params, lab.width, lab.bound)
                rep = verify_labeling(p4, bad)
                assert all(v in m[:2] for m in rep.mismatches)
                # the report matches a direct recomputation from the truth
                truth = {(a, b) for a in range(4) for b in range(a + 1, 4)
                         if a == v or b == v}
                for a, b in truth:
                    try:
                        got = bad.labels[a].node(bad.width), bad.labels[b].node(bad.width)
                        wrong = N.adjacent(*got) != p4.has_edge(a, b)
                    except DecodeError:
                        wrong = True
                    assert wrong == any(m[:2] == (a, b) for m in rep.mismatches)
                hit |= bool(rep.mismatches)
        assert hit

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            verify_labeling(path(3), chain_scheme(path(4)))

    def test_report_dict(self):
        d = verify_labeling(path(4), chain_scheme(path(4))).to_dict()
        assert d["ok"] and d["pairs_checked"] == 6 and d["width"] == 3


class TestCover:
    def test_p3_by_edges(self):
        p3 = build_graph(3, [(0, 1), (1, 2)])
        e = chain_scheme(edge())
        lab = cover_scheme(p3, [({0, 1}, e), ({1, 2}, e)], c=2)
        assert verify_labeling(p3, lab).ok

    def test_uncovered_edge(self):
        p3 = build_graph(3, [(0, 1), (1, 2)])
        single = chain_scheme(bipartite_graph(1, [], [0]))
        with pytest.raises(DecompositionError, match=r"uncovered edge \(1,2\)") as exc:
            cover_scheme(p3, [({0, 1}, chain_scheme(edge())), ({2}, single)], c=2)
        assert exc.value.witness == (1, 2)

    def test_multiplicity(self):
        p3 = build_graph(3, [(0, 1), (1, 2)])
        e = chain_scheme(edge())
        with pytest.raises(DecompositionError, match="c=1"):
            cover_scheme(p3, [({0, 1}, e), ({1, 2}, e)], c=1)

    def test_identity_cover(self):
        z = universal_chain(3)
        inner = chain_scheme(z)
        lab = cover_scheme(z, [(range(6), inner)], c=1)
        assert verify_labeling(z, lab).ok
        for v in range(6):
            assert lab.node(v).entries == ((0, inner.node(v)),)

    @settings(max_examples=40)
    @given(bipartite_graphs(max_n=9), st.integers(0, 2**32))
    def test_edge_union_semantics(self, bg, seed):
        # pieces: one per edge plus singletons; decode = union of piece edges
        rng = random.Random(seed)
        es = bg.edges()
        keep = [e for e in es if rng.random() < 0.7]
        g_keep = build_graph(bg.n, keep)
        pieces = [(set(e), chain_scheme(edge())) for e in keep]
        covered = set(v for e in keep for v in e)
        single = chain_scheme(bipartite_graph(1, [], [0]))
        pieces += [({v}, single) for v in range(bg.n) if v not in covered]
        c = max([sum(1 for p, _ in pieces if v in p) for v in range(bg.n)] + [1])
        if c > 7:
            return
        lab = cover_scheme(g_keep, pieces, c=c)
        assert verify_labeling(g_keep, lab).ok


def star_provider(g, verts):
    centre = min(verts)
    return SplitStep(A={centre}, B1=verts - {centre})


def leaf_peeler(g, verts):
    v = min(verts, key=lambda x: (bin(g.adj[x] & sum(1 << u for u in verts)).count("1"), x))
    return SplitStep(A={v}, B1=verts - {v})


class TestSplit:
    def test_star_non_neighbours(self):
        s = star(6)

        def provider(g, verts):
            if 0 in verts:
                return SplitStep(A={0}, B1=verts - {0})
            return SplitStep(A=verts)

        lab = split_scheme(s, provider, d=0, bipartite_mode=True)
        assert verify_labeling(s, lab).ok
        assert lab.node(0).flag1 == N.NON_NEIGHBOURS and lab.node(0).list1 == ()

    def test_p4_peel(self):
        p4 = path(4)
        lab = split_scheme(p4, leaf_peeler, d=1)
        rep = verify_labeling(p4, lab)
        assert rep.ok and rep.within_bound

    def test_b1_b2_edge_rejected(self):
        p4 = path(4)

        def bad(g, verts):
            return SplitStep(A={0}, B1={1}, B2={2, 3} & verts) if 0 in verts else SplitStep(A=verts)

        with pytest.raises(DecompositionError) as exc:
            split_scheme(p4, bad, d=3)
        assert exc.value.witness == (1, 2)

    def test_empty_a_rejected(self):
        with pytest.raises(DecompositionError, match="empty A"):
            split_scheme(path(3), lambda g, v: SplitStep(A=set(), B1=v), d=2)

    def test_d_exceeded(self):
        with pytest.raises(DecompositionError, match="d=0"):
            split_scheme(path(4), star_provider, d=0)

    def test_non_partition_rejected(self):
        with pytest.raises(DecompositionError):
            split_scheme(path(3), lambda g, v: SplitStep(A={0}, B1={0, 1, 2}), d=2)

    def test_inner_must_be_edgeless_by_default(self):
        with pytest.raises(DecompositionError, match="edgeless"):
            split_scheme(path(3), lambda g, v: SplitStep(A=v), d=2)

    @settings(max_examples=50)
    @given(bipartite_graphs(min_n=1, max_n=12), st.integers(0, 2**32), st.booleans())
    def test_random_providers(self, bg, seed, bip):
        rng = random.Random(seed)

        def provider(g, mask):
            verts = list(iter_bits(mask))
            # A: a random independent set, grown greedily
            rng.shuffle(verts)
            a = 0
            for v in verts:
                if not g.adj[v] & a and (not a or rng.random() < 0.4):
                    a |= 1 << v
            rest = mask & ~a
            b1 = b2 = 0
            for comp in component_masks(g.g, rest):
                if rng.random() < 0.5:
                    b1 |= comp
                else:
                    b2 |= comp
            return SplitStep(a, b1, b2)

        nodes = split_nodes(bg, bg.g.vertices_mask, provider, d=bg.n, bipartite_mode=bip)
        for u in range(bg.n):
            x = nodes[u]
            assert 0 <= x.index < bg.n
            assert x.left[0] <= x.left[1] <= x.index < x.right[0] <= x.right[1]
            for v in range(u + 1, bg.n):
                y = nodes[v]
                assert N.adjacent(x, y) == bg.has_edge(u, v)
                if bg.has_edge(u, v):
                    same = (x.left, x.right) == (y.left, y.right)
                    inside = any(lo <= y.index < hi for lo, hi in (x.left, x.right)) or \
                        any(lo <= x.index < hi for lo, hi in (y.left, y.right))
                    assert same or inside
        assert sorted(nd.index for nd in nodes.values()) == list(range(bg.n))


class TestLabelingJson:
    def test_round_trip(self):
        z = universal_chain(4)
        lab = chain_scheme(z)
        back = Labeling.from_json(lab.to_json())
        assert back.labels == lab.labels and back.bound == lab.bound and back.width == lab.width
        assert verify_labeling(z, back).ok

    @pytest.mark.parametrize("text", ["[", '{"labels": ["1"]}', '{"labels": ["1"], "bits": [], "scheme": "x", "width": 2}'])
    def test_malformed(self, text):
        with pytest.raises(DecodeError):
            Labeling.from_json(text)

    def test_bound(self):
        b = Bound(2, 3)
        assert b.bits(5) == 13 and b.constant == 5
