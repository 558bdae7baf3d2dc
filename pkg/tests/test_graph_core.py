import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersat.errors import GraphRangeError, GuardrailError, SupersatError
from supersat.models import Graph, GraphFamilySpec, VertexPartition
from supersat.services import graph_core
from supersat.services.counting_service import contains_copy

from tests.strategies import graphs


def test_turan_part_sizes_are_largest_first():
    assert graph_core.turan_part_sizes(7, 3) == (3, 2, 2)
    assert graph_core.turan_part_sizes(6, 3) == (2, 2, 2)
    assert graph_core.turan_edge_count(6, 3) == 12
    assert graph_core.turan_edge_count(5, 2) == 6


def test_turan_part_sizes_rejects_too_many_parts():
    with pytest.raises(SupersatError):
        graph_core.turan_part_sizes(2, 3)


def test_turan_graph_is_regular():
    built = graph_core.build_turan(6, 3)
    assert built.graph.m == 12
    assert set(built.graph.degrees) == {4}
    assert built.partition.sizes == (2, 2, 2)


def test_turan_plus_edge_adds_one_class_edge():
    built = graph_core.build_turan_plus_edge(7, 3)
    assert built.graph.m == graph_core.turan_edge_count(7, 3) + 1
    (u, v), = built.added_edges
    assert built.partition.same_part(u, v)
    # the smallest part with two vertices, last one on ties
    assert (u, v) == (5, 6)


def test_turan_plus_edge_explicit_part():
    built = graph_core.build_turan_plus_edge(7, 3, part=0)
    assert built.added_edges == ((0, 1),)
    with pytest.raises(SupersatError):
        graph_core.build_turan_plus_edge(4, 3, part=1)


def test_bipartite_plus_edge_and_kite():
    kite = graph_core.build_kite().graph
    assert kite.m == 5
    assert sorted(kite.degrees) == [2, 2, 3, 3]
    assert graph_core.build_bipartite_plus_edge(3, 2).graph.m == 7


@pytest.mark.parametrize("r", [2, 3, 4])
def test_partial_turan_has_exact_edge_count_and_no_clique(r):
    for m in range(max(1, r * (r - 1) // 2), 40):
        built = graph_core.build_partial_turan(m, r)
        assert built.graph.m == m
        assert not contains_copy(built.graph, graph_core.build_clique(r + 1).graph)
        assert built.partition.r == r


def test_partial_turan_rejects_small_m():
    with pytest.raises(SupersatError):
        graph_core.build_partial_turan(2, 3)


def test_small_named_graphs():
    assert graph_core.build_petersen().graph.m == 15
    assert set(graph_core.build_petersen().graph.degrees) == {3}
    book = graph_core.build_book(3).graph
    assert (book.n, book.m) == (5, 7)
    assert graph_core.build_star(4).graph.m == 4
    assert graph_core.build_path(4).graph.m == 3
    assert graph_core.build_cycle(5).graph.m == 5


def test_build_family_checks_parameter_count():
    assert graph_core.build_family(GraphFamilySpec("turan", (6, 3))).graph.m == 12
    with pytest.raises(SupersatError):
        graph_core.build_family(GraphFamilySpec("turan", (6,)))


def test_disjoint_union_shifts_labels():
    union = graph_core.disjoint_union(graph_core.build_clique(3).graph, graph_core.build_clique(2).graph)
    assert union.n == 5
    assert union.has_edge(3, 4)
    assert len(union.components()) == 2


def test_recognize_complete_multipartite():
    k23 = graph_core.build_complete_multipartite([2, 3]).graph
    partition = graph_core.recognize_complete_multipartite(k23)
    assert sorted(partition.sizes) == [2, 3]
    assert graph_core.is_complete_bipartite(k23)
    assert graph_core.is_complete_bipartite(k23.with_vertices(7))
    assert not graph_core.is_complete_bipartite(graph_core.build_cycle(5).graph)
    assert not graph_core.is_complete_bipartite(graph_core.build_clique(3).graph)
    assert graph_core.is_regular_complete_multipartite(graph_core.build_turan(9, 3).graph, 3)
    assert not graph_core.is_regular_complete_multipartite(graph_core.build_turan(8, 3).graph)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphRangeError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(SupersatError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(SupersatError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_partition_rejects_overlap():
    with pytest.raises(SupersatError):
        VertexPartition.from_parts([[0, 1], [1, 2]])


# number of graphs with m edges and no isolated vertices
@pytest.mark.parametrize("m, expected", [(1, 1), (2, 2), (3, 5), (4, 11), (5, 26), (6, 68)])
def test_enumeration_counts(m, expected):
    levels = dict(graph_core.enumerate_graph_levels(2 * m, m, override=True))
    assert len(levels[m]) == expected


def test_enumeration_levels_hold_no_isomorphic_pair():
    reps = dict(graph_core.enumerate_graph_levels(8, 4))[4]
    for i, g in enumerate(reps):
        assert g.min_degree >= 1
        for h in reps[i + 1:]:
            assert not nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_enumerate_graphs_on_four_vertices():
    counts = [sum(1 for _ in graph_core.enumerate_graphs_on(4, m)) for m in range(7)]
    assert counts == [1, 1, 2, 3, 2, 1, 1]
    assert all(g.n == 4 for g in graph_core.enumerate_graphs_on(4, 5))


def test_enumerate_graphs_labeled():
    assert sum(1 for _ in graph_core.enumerate_graphs(4, 2, dedupe=False)) == 15


def automorphisms(g: Graph) -> int:
    nxg = g.to_networkx()
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(nxg, nxg).isomorphisms_iter())


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_add_up_to_the_labeled_count(n):
    pairs = n * (n - 1) // 2
    for m in range(pairs + 1):
        orbits = sum(math.factorial(n) // automorphisms(g) for g in graph_core.enumerate_graphs_on(n, m))
        assert orbits == math.comb(pairs, m)
    if n <= 5:
        labeled = sum(1 for m in range(pairs + 1) for _ in graph_core.enumerate_graphs(n, m, dedupe=False))
        assert labeled == 2 ** pairs


def test_enumeration_guardrail():
    with pytest.raises(GuardrailError):
        list(graph_core.enumerate_graphs(11, 2))
    assert sum(1 for _ in graph_core.enumerate_graphs(11, 1, override=True)) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_relabelled_graphs_are_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(dict(enumerate(perm)), n=g.n)
    assert graph_core.are_isomorphic(g, h)
    assert graph_core.refinement_certificate(g) == graph_core.refinement_certificate(h)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_isomorphism_classes_agree_with_networkx(g):
    classes = graph_core.IsomorphismClasses()
    assert classes.add(g)
    assert not classes.add(g.relabel({v: g.n - 1 - v for v in range(g.n)}, n=g.n))
    assert len(classes) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_complement_is_an_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2
