"""Text serialization round trips and parse failures."""

import pytest

from kinglab.constructions import (
    kingless_digraph,
    layered_tournament,
    parity_tournament,
    perturbed_kingless_digraph,
)
from kinglab.fileformat import GraphFileError, format_graph, parse_graph, read_graph, write_graph
from kinglab.graphs import Digraph, GraphError, Tournament, random_tournament


def test_frozen_text():
    assert format_graph(parity_tournament(3)) == "tournament 3\n0 1\n1 2\n2 0\n"
    assert format_graph(Digraph.from_edges(2, [(1, 0)])) == "digraph 2\n1 0\n"
    assert format_graph(Digraph.from_edges(3, [])) == "digraph 3\n"


def test_round_trip_preserves_graph_and_type():
    graphs = [
        layered_tournament(7),
        parity_tournament(9),
        kingless_digraph(5),
        perturbed_kingless_digraph(5, 2, 1),
        random_tournament(12, 4),
        Digraph.from_edges(1, []),
    ]
    for g in graphs:
        back = parse_graph(format_graph(g))
        assert back == g
        assert type(back) is type(g)


def test_parse_tolerates_blank_lines():
    g = parse_graph("digraph 3\n\n0 1\n\n\n1 2\n")
    assert g == Digraph.from_edges(3, [(0, 1), (1, 2)])


def test_parse_failures():
    for text in (
        "",
        "   \n\n",
        "graph 3\n0 1\n",
        "digraph\n",
        "digraph three\n",
        "digraph 3 extra\n",
        "digraph 3\n0\n",
        "digraph 3\n0 1 2\n",
        "digraph 3\n0 x\n",
    ):
        with pytest.raises(GraphFileError):
            parse_graph(text)


def test_parse_rejects_invalid_graphs():
    with pytest.raises(GraphError):
        parse_graph("digraph 3\n0 1\n0 1\n")  # duplicate edge
    with pytest.raises(GraphError):
        parse_graph("digraph 3\n0 1\n1 0\n")  # two-cycle
    with pytest.raises(GraphError):
        parse_graph("digraph 2\n0 2\n")  # endpoint out of range
    with pytest.raises(GraphError):
        parse_graph("tournament 3\n0 1\n")  # missing pairs


def test_file_io(tmp_path):
    path = tmp_path / "t.graph"
    g = parity_tournament(5)
    write_graph(g, path)
    raw = path.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    assert raw == format_graph(g).encode("utf-8")
    back = read_graph(path)
    assert back == g and isinstance(back, Tournament)
