"""Shared fixtures: named graphs, the small connected corpus, cubic graphs on 8 nodes."""

import os
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from src.graphs import Graph, enumerate_graphs, write_graph6
from src.graphs import families


def cubic_graphs_8() -> list[Graph]:
    """The connected 3-regular graphs on 8 nodes, one per isomorphism class.

    Backtracking over labeled graphs with N(0) = {1, 2, 3} fixed: every class
    has such a labeling, so the search stays small before deduplication.
    """
    n = 8
    adj = np.zeros((n, n), dtype=bool)
    for v in (1, 2, 3):
        adj[0, v] = adj[v, 0] = True
    labeled: list[nx.Graph] = []

    def extend() -> None:
        deficit = 3 - adj.sum(axis=1)
        open_nodes = np.flatnonzero(deficit > 0)
        if open_nodes.size == 0:
            labeled.append(nx.from_numpy_array(adj.astype(int)))
            return
        v = int(open_nodes[0])
        # neighbours above v were all chosen on v's turn; keep them increasing
        floor = max(np.flatnonzero(adj[v]).tolist() + [v])
        for w in open_nodes[open_nodes > floor].tolist():
            adj[v, w] = adj[w, v] = True
            extend()
            adj[v, w] = adj[w, v] = False

    extend()
    classes: list[nx.Graph] = []
    for candidate in labeled:
        if not nx.is_connected(candidate):
            continue
        if not any(nx.is_isomorphic(candidate, known) for known in classes):
            classes.append(candidate)
    return [Graph.from_networkx(graph) for graph in classes]


@pytest.fixture(scope="session")
def cubic8() -> list[Graph]:
    return cubic_graphs_8()


@pytest.fixture(scope="session")
def connected_upto6() -> list[Graph]:
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto5() -> list[Graph]:
    return [g for n in range(1, 6) for g in enumerate_graphs(n)]


@pytest.fixture
def p3() -> Graph:
    return families.path(3)


@pytest.fixture
def k2() -> Graph:
    return families.complete(2)


@pytest.fixture
def k3() -> Graph:
    return families.complete(3)


@pytest.fixture
def star3() -> Graph:
    return families.star(3)


@pytest.fixture
def corpus4_lines() -> list[str]:
    return [write_graph6(g) + "\n" for g in enumerate_graphs(4)]


def _corpus_path(variable: str) -> Path:
    value = os.environ.get(variable)
    if not value:
        pytest.skip(f"{variable} is not set")
    path = Path(value)
    if not path.is_file():
        pytest.skip(f"{variable} points to a missing file: {path}")
    return path


@pytest.fixture(scope="session")
def corpus8_path() -> Path:
    return _corpus_path("WALK_ENTROPY_CORPUS8")


@pytest.fixture(scope="session")
def corpus_le8_path() -> Path:
    return _corpus_path("WALK_ENTROPY_CORPUS_LE8")
