import networkx as nx
import pytest
from hypothesis import given, settings

from supersat.errors import GraphParseError, GraphRangeError, SupersatError
from supersat.models import Graph
from supersat.services import graph_core
from supersat.utils.graph_io import (
    detect_format,
    load_graph,
    read_graph,
    read_graph6,
    save_graph,
    write_edge_list,
    write_graph6,
)

from tests.strategies import graphs


def test_edge_list_reads_header_and_edges():
    g = read_graph("4 3\n0 1\n1 2\n\n2 3\n")
    assert (g.n, g.m) == (4, 3)
    assert g.has_edge(2, 3)


def test_edge_list_writes_sorted_edges():
    g = Graph.from_edges(3, [(2, 1), (0, 1)])
    assert write_edge_list(g) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("x y\n", GraphParseError, 1),
        ("3 1\n0 3\n", GraphRangeError, 2),
        ("3 2\n0 1\n1 0\n", GraphParseError, 3),
        ("3 2\n0 1\n", GraphParseError, 1),
        ("3 1\n1 1\n", GraphParseError, 2),
        ("3 1\n0 1 2\n", GraphParseError, 2),
        ("3 1\n0 \u00b2\n", GraphParseError, 2),
        ("\u00b3 0\n", GraphParseError, 1),
    ],
)
def test_edge_list_errors_carry_line_numbers(text, error, line):
    with pytest.raises(error) as info:
        read_graph(text, "edgelist")
    assert info.value.line == line


def test_graph6_of_triangle():
    assert write_graph6(graph_core.build_clique(3).graph).strip() == "Bw"
    assert read_graph6("Bw") == graph_core.build_clique(3).graph
    assert read_graph6(">>graph6<<Bw\n").m == 3


def test_graph6_rejects_garbage():
    with pytest.raises(GraphParseError):
        read_graph6("Bw Bw")


def test_detect_format():
    assert detect_format("Bw\n") == "graph6"
    assert detect_format("3 0\n") == "edgelist"
    with pytest.raises(SupersatError):
        read_graph("3 0\n", "adjacency")


def test_save_and_load_both_formats(tmp_path):
    petersen = graph_core.build_petersen().graph
    for fmt in ("edgelist", "graph6"):
        path = tmp_path / f"petersen.{fmt}"
        save_graph(petersen, path, fmt)
        assert load_graph(path) == petersen


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=9))
def test_graph6_matches_networkx_encoding(g):
    expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode()
    assert write_graph6(g) == expected
    assert nx.is_isomorphic(read_graph6(expected).to_networkx(), g.to_networkx())


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=12))
def test_edge_list_round_trip(g):
    text = write_edge_list(g)
    assert read_graph(text, "edgelist") == g
    assert text.startswith(f"{g.n} {g.m}\n")
