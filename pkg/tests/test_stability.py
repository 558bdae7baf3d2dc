import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersat.errors import GuardrailError, SupersatError
from supersat.models import DistanceMethod, Graph
from supersat.services import graph_core
from supersat.services.stability_service import (
    distance_for_labels,
    distance_to_bipartite,
    distance_to_turan,
    edit_distance,
)

from tests.strategies import graphs


def test_edit_distance_with_identification():
    c4 = graph_core.build_cycle(4).graph
    k22 = graph_core.build_complete_multipartite([2, 2]).graph
    assert edit_distance(c4, k22) == 4
    assert edit_distance(c4, k22, [0, 2, 1, 3]) == 0
    assert edit_distance(c4, k22, {0: 0, 1: 2, 2: 1, 3: 3}) == 0


def test_edit_distance_validates_the_identification():
    c4 = graph_core.build_cycle(4).graph
    k22 = graph_core.build_complete_multipartite([2, 2]).graph
    with pytest.raises(SupersatError):
        edit_distance(c4, k22, [0, 0, 1, 2])
    with pytest.raises(SupersatError):
        edit_distance(c4, k22, [0, 1, 2])
    with pytest.raises(SupersatError):
        edit_distance(c4, k22, [0, 1, 2, 7])
    with pytest.raises(SupersatError):
        edit_distance(c4, graph_core.build_clique(5).graph)


def test_distance_for_labels_counts_left_out_vertices():
    k3 = graph_core.build_clique(3).graph
    # parts {0}, {1}; vertex 2 out: its two edges go
    assert distance_for_labels(k3, [0, 1, -1]) == 2
    assert distance_for_labels(k3, [0, 1, 2]) == 0
    with pytest.raises(SupersatError):
        distance_for_labels(k3, [0, 1])


@pytest.mark.parametrize(
    "graph, expected",
    [
        (graph_core.build_clique(4).graph, 2),
        (graph_core.build_cycle(5).graph, 3),
        (graph_core.build_complete_multipartite([2, 3]).graph, 0),
        (graph_core.build_star(4).graph, 0),
    ],
)
def test_distance_to_bipartite(graph, expected):
    result = distance_to_bipartite(graph)
    assert result.distance == expected
    assert result.method is DistanceMethod.EXACT
    assert distance_for_labels(graph, result.labels) == expected


def test_distance_to_turan():
    assert distance_to_turan(graph_core.build_cycle(5).graph, 2).distance == 3
    assert distance_to_turan(graph_core.build_turan(9, 3).graph, 3).distance == 0
    assert distance_to_turan(graph_core.build_turan_plus_edge(9, 3).graph, 3).distance == 1


def test_turan_witness_parts_are_balanced():
    result = distance_to_turan(graph_core.build_petersen().graph, 3)
    sizes = result.witness.sizes
    assert max(sizes) - min(sizes) <= 1
    assert result.witness.r == 3


def test_empty_graph_is_at_distance_zero():
    assert distance_to_bipartite(Graph(0)).distance == 0


def test_distance_arguments():
    with pytest.raises(SupersatError):
        distance_to_turan(graph_core.build_clique(3).graph, 0)
    with pytest.raises(SupersatError):
        distance_to_bipartite(graph_core.build_clique(3).graph, mode="guess")


def test_exact_distance_guardrail():
    big = graph_core.build_cycle(20).graph
    with pytest.raises(GuardrailError):
        distance_to_bipartite(big)
    heuristic = distance_to_bipartite(big, mode="heuristic", seed=4)
    assert heuristic.method is DistanceMethod.LOCAL_SEARCH
    assert distance_for_labels(big, heuristic.labels) == heuristic.distance


def test_heuristic_is_reproducible():
    g = graph_core.build_petersen().graph
    first = distance_to_turan(g, 2, "heuristic", seed=11, starts=4)
    second = distance_to_turan(g, 2, "heuristic", seed=11, starts=4)
    assert first == second


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_heuristic_never_beats_exact(g):
    exact = distance_to_bipartite(g)
    heuristic = distance_to_bipartite(g, mode="heuristic", starts=3, workers=1)
    assert heuristic.distance >= exact.distance
    assert exact.distance <= g.m


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_turan_distance_is_realized_by_its_witness(g):
    result = distance_to_turan(g, 2)
    assert distance_for_labels(g, result.labels) == result.distance


def test_edit_distance_examples():
    k4 = graph_core.build_clique(4).graph
    k22 = graph_core.build_complete_multipartite([2, 2]).graph
    assert edit_distance(k4, k22) == 2
    t63 = graph_core.build_turan(6, 3).graph
    t63_plus = graph_core.build_turan_plus_edge(6, 3).graph
    assert edit_distance(t63_plus, t63) == 1


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=8), st.data())
def test_edit_distance_is_symmetric(g, data):
    h = data.draw(graphs(min_n=g.n, max_n=g.n))
    assert edit_distance(g, h) == edit_distance(h, g)
    assert edit_distance(g, g) == 0


@pytest.mark.parametrize("seed", range(5))
def test_heuristic_recovers_a_relabeled_turan_graph(seed):
    t93 = graph_core.build_turan(9, 3).graph
    # 4 is a unit mod 9
    shuffled = t93.relabel({v: (4 * v) % 9 for v in range(9)}, n=9)
    result = distance_to_turan(shuffled, 3, "heuristic", seed=seed, starts=2, workers=1)
    assert result.distance == 0
    assert sorted(result.witness.sizes) == [3, 3, 3]


def test_parallel_starts_match_serial():
    g = graph_core.build_petersen().graph
    serial = distance_to_turan(g, 3, "heuristic", seed=5, starts=6, workers=1)
    parallel = distance_to_turan(g, 3, "heuristic", seed=5, starts=6, workers=3)
    assert serial == parallel


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=1, max_n=7), st.integers(min_value=2, max_value=3))
def test_turan_heuristic_never_beats_exact(g, r):
    exact = distance_to_turan(g, r)
    heuristic = distance_to_turan(g, r, "heuristic", starts=3, workers=1)
    assert heuristic.distance >= exact.distance
    assert distance_for_labels(g, heuristic.labels) == heuristic.distance
