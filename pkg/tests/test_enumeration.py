import itertools

import networkx as nx
import numpy as np
import pytest

from src.errors import GraphError
from src.graphs import (
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    enumerate_graphs,
    is_connected,
    parse_graph6,
)
from src.graphs import families

CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112]
ALL_COUNTS = [1, 2, 4, 11, 34, 156]


def brute_force_classes(n: int, connected: bool) -> int:
    """Isomorphism classes among all labeled graphs on n nodes."""
    pairs = list(itertools.combinations(range(n), 2))
    classes: list[nx.Graph] = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        graph = nx.empty_graph(n)
        graph.add_edges_from(p for p, bit in zip(pairs, bits) if bit)
        if connected and not nx.is_connected(graph):
            continue
        if not any(nx.is_isomorphic(graph, known) for known in classes):
            classes.append(graph)
    return len(classes)


def min_bitstring(g: Graph) -> str:
    """Smallest upper-triangle bitstring (graph6 column order) over all relabelings."""
    pairs = [(i, j) for j in range(g.n) for i in range(j)]
    return min(
        "".join("1" if g.adj[p[i], p[j]] else "0" for i, j in pairs)
        for p in itertools.permutations(range(g.n))
    )


def bitstring(g: Graph) -> str:
    return "".join("1" if g.adj[i, j] else "0" for j in range(g.n) for i in range(j))


@pytest.mark.parametrize("n,expected", enumerate(CONNECTED_COUNTS, start=1))
def test_connected_counts(n, expected):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == expected
    assert all(is_connected(g) for g in graphs)


@pytest.mark.parametrize("n,expected", enumerate(ALL_COUNTS, start=1))
def test_all_graph_counts(n, expected):
    assert len(list(enumerate_graphs(n, connected=False))) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("connected", [True, False])
def test_counts_match_labeled_brute_force(n, connected):
    assert len(list(enumerate_graphs(n, connected))) == brute_force_classes(n, connected)


def test_representatives_are_pairwise_non_isomorphic():
    graphs = [g.to_networkx() for g in enumerate_graphs(5)]
    for a, b in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)


def test_three_nodes_gives_path_and_triangle():
    graphs = list(enumerate_connected(3))
    assert sorted(g.m for g in graphs) == [2, 3]


def test_output_is_in_canonical_order():
    keys = [canonical_form(g) for g in enumerate_graphs(5)]
    assert keys == sorted(keys)


def test_representatives_are_canonical():
    for g in enumerate_graphs(5):
        assert canonical_graph(g) == g


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_representatives_have_minimal_bitstring(n):
    for g in enumerate_graphs(n, connected=False):
        assert bitstring(g) == min_bitstring(g)
        assert canonical_form(g) == int(bitstring(g), 2)


def test_minimum_is_over_all_relabelings():
    # no relabeling that sorts this graph by degree reaches the minimum
    g = parse_graph6("DK[")
    assert bitstring(canonical_graph(g)) == min_bitstring(g)


def test_canonical_form_is_relabeling_invariant():
    rng = np.random.default_rng(3)
    g = families.clique_with_pendants(4, [0, 0, 2])
    for _ in range(5):
        perm = rng.permutation(g.n)
        relabeled = Graph(g.n, g.adj[np.ix_(perm, perm)])
        assert canonical_form(relabeled) == canonical_form(g)
        assert are_isomorphic(relabeled, g)


def test_non_isomorphic_same_degree_sequence():
    # C6 and two triangles are both 2-regular on 6 nodes
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(families.cycle(6), two_triangles)


@pytest.mark.parametrize("n", [0, 8])
def test_out_of_range(n):
    with pytest.raises(GraphError):
        enumerate_graphs(n)


@pytest.mark.slow
def test_seven_nodes():
    assert len(list(enumerate_connected(7))) == 853
