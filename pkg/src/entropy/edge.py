"""Edge walk entropy: walks selected by the edge they connect, and the line-graph entropy."""

from dataclasses import dataclass

import numpy as np

from src.entropy.walk import shannon_bits, walk_entropy
from src.errors import GraphError, SpectralError
from src.graphs import EdgeList, Graph, is_connected, line_graph
from src.spectra import (
    average_energy,
    check_beta,
    communicability,
    graph_spectrum,
    partition_function,
    scaled_communicability,
)


@dataclass(frozen=True, eq=False)
class EdgeProbabilities:
    """p_ij(beta) = (e^{beta A})_ij / D(beta) over the edges, D(beta) = tr(A e^{beta A}) / 2."""

    beta: float
    edges: EdgeList
    p: np.ndarray


def _edge_index(g: Graph) -> tuple[EdgeList, np.ndarray, np.ndarray]:
    if g.m == 0:
        raise GraphError("Edge walk probabilities need at least one edge")
    edges = g.edges()
    rows = np.array([i for i, _ in edges])
    cols = np.array([j for _, j in edges])
    return edges, rows, cols


def edge_walk_probabilities(g: Graph, beta: float) -> EdgeProbabilities:
    """Edge probabilities from the off-diagonal communicabilities.

    At beta = 0 every off-diagonal entry vanishes; the beta -> 0+ limit,
    uniform over edges, is returned.
    """
    edges, rows, cols = _edge_index(g)
    beta = check_beta(beta)
    if beta == 0:
        return EdgeProbabilities(beta, edges, np.full(len(edges), 1.0 / len(edges)))
    values = scaled_communicability(g, beta)[rows, cols]
    return EdgeProbabilities(beta, edges, values / values.sum())


def edge_walk_probabilities_from_energy(g: Graph, beta: float) -> EdgeProbabilities:
    """The same probabilities through the average energy: p_ij = -2 (e^{beta A})_ij / (Z <E>)."""
    edges, rows, cols = _edge_index(g)
    energy = average_energy(g, beta)
    if energy == 0:
        raise SpectralError(f"Average energy vanishes at beta={beta}; the energy form is undefined")
    values = communicability(g, beta).matrix[rows, cols]
    p = -2.0 * values / (partition_function(g, beta) * energy)
    return EdgeProbabilities(float(beta), edges, p)


def edge_walk_entropy(g: Graph, beta: float) -> float:
    return shannon_bits(edge_walk_probabilities(g, beta).p)


def line_walk_entropy_direct(g: Graph, beta: float) -> float:
    """Node walk entropy of the line graph L(g) itself."""
    lg, _ = line_graph(g)
    return walk_entropy(lg, beta)


def zero_temp_edge_probabilities(g: Graph) -> EdgeProbabilities:
    """q_ij = 2 phi_1(i) phi_1(j) / lambda_1, the beta -> infinity limit of p_ij."""
    edges, rows, cols = _edge_index(g)
    if not is_connected(g):
        raise GraphError("The zero-temperature limit needs a connected graph")
    s = graph_spectrum(g)
    phi = s.principal_vector
    q = 2.0 * phi[rows] * phi[cols] / s.principal_value
    return EdgeProbabilities(float("inf"), edges, q)


def zero_temp_edge_entropy(g: Graph) -> float:
    return shannon_bits(zero_temp_edge_probabilities(g).p)
