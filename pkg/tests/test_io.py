import networkx as nx
import numpy as np
import pytest
from hypothesis import given

import oracles
from implicitrep.exceptions import GraphError, NotBipartiteError
from implicitrep.families import cycle, path
from implicitrep.graph import BipartiteGraph, build_graph
from implicitrep.io import from_graph6, from_json, read_graph, to_graph6, to_json, write_graph
from implicitrep.validation import check_bipartite_graph, check_count, check_graph, check_pairs
from strategies import bipartite_graphs, graphs


class TestGraph6:
    @given(graphs(max_n=12))
    def test_matches_networkx(self, g):
        assert to_graph6(g) == oracles.graph6_via_networkx(g)

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    @given(graphs(min_n=1, max_n=10))
    def test_networkx_reads_ours(self, g):
        h = nx.from_graph6_bytes(to_graph6(g).encode())
        assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()

    def test_large_n_size_field(self):
        g = build_graph(70, [(0, 69)])
        s = to_graph6(g)
        assert s[0] == "~" and from_graph6(s) == g
        assert s == oracles.graph6_via_networkx(g)

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<" + to_graph6(path(4))) == path(4).g

    def test_known_strings(self):
        assert to_graph6(build_graph(0, [])) == "?"
        assert to_graph6(path(3)) == "Bg"

    @pytest.mark.parametrize("bad, pos", [("", 0), ("C\x7f", 1), ("Dx", 1), ("C~~", 1)])
    def test_malformed(self, bad, pos):
        with pytest.raises(GraphError) as exc:
            from_graph6(bad)
        assert exc.value.position == pos

    def test_nonzero_padding(self):
        # n = 2 uses one data bit; set a padding bit as well
        with pytest.raises(GraphError, match="padding"):
            from_graph6("A" + chr(63 + 0b110000))


class TestJson:
    @given(bipartite_graphs())
    def test_bipartite_round_trip(self, bg):
        back = from_json(to_json(bg))
        assert isinstance(back, BipartiteGraph)
        assert back == bg

    @given(graphs())
    def test_plain_round_trip(self, g):
        assert from_json(to_json(g)) == g

    @pytest.mark.parametrize("text", ['{"edges": []}', '{"n": 3, "edges": [[0]]}',
                                      '{"n": 2, "edges": [], "sides": [0]}', "{not json"])
    def test_malformed(self, text):
        with pytest.raises(GraphError):
            from_json(text)

    def test_sides_must_be_independent(self):
        with pytest.raises(GraphError):
            from_json('{"n": 2, "edges": [[0, 1]], "sides": [0, 0]}')


def test_read_graph_sniffs_format():
    c6 = cycle(6)
    assert read_graph(write_graph(c6, "json")) == c6
    assert read_graph(write_graph(c6)) == c6.g
    with pytest.raises(ValueError):
        read_graph("x", fmt="dot")
    with pytest.raises(ValueError):
        write_graph(c6, "dot")


class TestValidation:
    def test_inputs_agree(self):
        g = path(4).g
        mat = np.zeros((4, 4), dtype=int)
        for u, v in g.edges():
            mat[u, v] = mat[v, u] = 1
        assert check_graph(mat) == g
        assert check_graph(nx.path_graph(4)) == g
        assert check_graph((4, g.edges())) == g
        assert check_graph(path(4)) == g

    def test_matrix_errors(self):
        with pytest.raises(GraphError):
            check_graph(np.zeros((2, 3)))
        with pytest.raises(GraphError):
            check_graph(np.array([[0, 1], [0, 0]]))
        with pytest.raises(GraphError):
            check_graph(np.eye(2))

    def test_networkx_labels(self):
        with pytest.raises(GraphError):
            check_graph(nx.relabel_nodes(nx.path_graph(2), {0: "a", 1: "b"}))

    def test_bipartite_coercion(self):
        assert check_bipartite_graph(path(4).g).side_a == 0b0101
        assert check_bipartite_graph(path(4).g, side_a=[1, 3]).side_a == 0b1010
        with pytest.raises(NotBipartiteError):
            check_bipartite_graph(cycle(5))

    def test_count_and_pairs(self):
        assert check_count(3, "n") == 3
        for bad in (True, 2.5, -1):
            with pytest.raises(ValueError):
                check_count(bad, "n")
        assert check_pairs([[0, 1]], 2).shape == (1, 2)
        with pytest.raises(ValueError):
            check_pairs([[0, 2]], 2)
        with pytest.raises(ValueError):
            check_pairs([0, 1], 2)
