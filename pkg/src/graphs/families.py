"""Named graph families used across the analyses."""

import networkx as nx

from src.graphs.graph import Graph


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def empty(n: int) -> Graph:
    return Graph.from_networkx(nx.empty_graph(n))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at node 0."""
    return Graph.from_networkx(nx.star_graph(leaves))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def clique_with_pendants(clique: int, attachments: list[int]) -> Graph:
    """K_clique on nodes 0..clique-1 plus one pendant node per entry of ``attachments``.

    Pendant k is node ``clique + k`` and hangs off clique node ``attachments[k]``.
    """
    graph = nx.complete_graph(clique)
    for k, anchor in enumerate(attachments):
        graph.add_edge(anchor, clique + k)
    return Graph.from_networkx(graph)
