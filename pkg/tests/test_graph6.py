import networkx as nx
import pytest
from hypothesis import given

from immpoly.graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6_lines
from immpoly.graphs import Graph

from strategies import graphs


def test_example_round_trip():
    G = parse_graph6("D?{")
    assert G.n == 5 and sorted(G.degrees) == [1, 1, 1, 1, 4]
    assert emit_graph6(G) == "D?{"


@pytest.mark.parametrize("bad", ["", "~", "A", "Dzzzzzz", "C\x7f"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_header_and_comments():
    import io

    stream = io.StringIO("# two graphs\n>>graph6<<A_\n\nBw\n")
    got = list(read_graph6_lines(stream))
    assert [g.n for g in got] == [2, 3] and got[1].m == 3


def test_agrees_with_networkx_on_atlas():
    for h in nx.graph_atlas_g()[1:]:
        text = nx.to_graph6_bytes(h, header=False).decode().strip()
        G = parse_graph6(text)
        assert G == Graph.from_edges(h.number_of_nodes(), h.edges())
        assert emit_graph6(G) == text


@given(graphs(max_n=70))
def test_round_trip(G):
    assert parse_graph6(emit_graph6(G)) == G
