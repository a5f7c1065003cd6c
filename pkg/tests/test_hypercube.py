from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from implicitrep.exceptions import CodeError, NotEmbeddableError, SearchBudgetExceeded
from implicitrep.families import complete, complete_bipartite, cycle, hypercube, path
from implicitrep.graph import build_graph
from implicitrep.hypercube import HypercubeCode, bfs_forest, hypercube_decode, hypercube_embed, hypercube_encode


def hamming_ok(g, emb):
    """Independent check: adjacency iff Hamming distance 1 inside a component."""
    for u, v in combinations(range(g.n), 2):
        if emb.comp[u] != emb.comp[v]:
            assert not g.has_edge(u, v)
            continue
        dist = sum(a != b for a, b in zip(emb.vector(u), emb.vector(v)))
        assert dist > 0
        assert (dist == 1) == g.has_edge(u, v)


class TestEmbed:
    def test_c4(self):
        emb = hypercube_embed(cycle(4))
        assert [emb.vector(v) for v in range(4)] == [(0, 0), (1, 0), (1, 1), (0, 1)]

    def test_k3(self):
        with pytest.raises(NotEmbeddableError):
            hypercube_embed(complete(3))

    def test_k23_not_embeddable(self):
        with pytest.raises(NotEmbeddableError):
            hypercube_embed(complete_bipartite(2, 3))

    def test_q3(self):
        emb = hypercube_embed(hypercube(3))
        assert emb.dim == 3
        hamming_ok(hypercube(3).g, emb)

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            hypercube_embed(hypercube(4), budget=3)

    def test_components_rooted_at_origin(self):
        g = build_graph(5, [(0, 1), (3, 4)])
        emb = hypercube_embed(g)
        assert emb.coords[0] == emb.coords[2] == emb.coords[3] == 0
        hamming_ok(g, emb)


class TestCode:
    def test_single_edge(self):
        code = hypercube_encode(build_graph(2, [(0, 1)]))
        assert code.entries == (1, 1, 1, 1)
        assert hypercube_decode(code) == build_graph(2, [(0, 1)])

    def test_edgeless(self):
        code = hypercube_encode(build_graph(3, []))
        assert code.to_csv() == "1,1,2,1,3,1"
        assert hypercube_decode(HypercubeCode.from_csv("1,1,2,1,3,1")) == build_graph(3, [])

    def test_p3(self):
        code = hypercube_encode(path(3))
        assert len(code.entries) == 6
        assert hypercube_decode(code) == path(3).g

    def test_all_q3_subgraphs_round_trip(self):
        q3 = hypercube(3).g
        for mask in range(1, 1 << 8):
            verts = [v for v in range(8) if mask >> v & 1]
            if len(verts) > 6:
                continue
            h = q3.induced(verts)
            code = hypercube_encode(h)
            assert len(code.entries) == 2 * h.n
            assert all(1 <= x <= h.n for x in code.entries)
            assert hypercube_decode(code) == h

    @given(st.integers(0, 2**16 - 1))
    def test_q4_subgraphs(self, mask):
        q4 = hypercube(4).g
        verts = [v for v in range(16) if mask >> v & 1]
        h = q4.induced(verts)
        emb = hypercube_embed(h)
        hamming_ok(h, emb)
        assert hypercube_decode(hypercube_encode(h, emb)) == h

    def test_custom_forest(self):
        c4 = cycle(4).g
        parents = [0, 0, 3, 0]
        code = hypercube_encode(c4, parents=parents)
        assert code.parents == (1, 1, 4, 1)
        assert hypercube_decode(code) == c4

    def test_bfs_forest(self):
        assert bfs_forest(build_graph(4, [(0, 2), (2, 3)])) == [0, 1, 0, 2]

    def test_inconsistent_embedding(self):
        emb = hypercube_embed(path(3))
        with pytest.raises(CodeError):
            hypercube_encode(cycle(4), emb=hypercube_embed(path(4)))
        with pytest.raises(CodeError):
            hypercube_encode(path(3), emb=emb, parents=[0, 0, 0])


class TestDecodeErrors:
    @pytest.mark.parametrize("entries", [(1, 1, 3, 1), (1, 2, 2, 1), (2, 1, 1, 1), (1, 0)])
    def test_invalid(self, entries):
        with pytest.raises(CodeError):
            hypercube_decode(entries)

    def test_cycle_in_parents(self):
        with pytest.raises(CodeError, match="cycle"):
            hypercube_decode((2, 1, 3, 1, 2, 1))

    @pytest.mark.parametrize("text", ["1,2,x", "1,1,1"])
    def test_csv(self, text):
        with pytest.raises(CodeError):
            HypercubeCode.from_csv(text)
