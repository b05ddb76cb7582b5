"""Node walk entropy and the comparison entropies (spectral Shannon, von Neumann).

All entropies are in bits.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import stats
from scipy.sparse import csgraph
from scipy.special import entr

from src.errors import GraphError
from src.graphs import Graph, is_connected, laplacian
from src.spectra import check_beta, graph_spectrum, shifted_weights, sym_eig

_LN2 = np.log(2.0)
_EIGEN_FLOOR = 1e-12


class VonNeumannNormalization(str, Enum):
    TRACE = "trace"
    RAW = "raw"
    NORMALIZED = "normalized"


@dataclass(frozen=True, eq=False)
class NodeProbabilities:
    """p_i(beta) = (e^{beta A})_ii / Z, the chance that a random closed walk starts at node i."""

    beta: float
    p: np.ndarray


def shannon_bits(p: np.ndarray) -> float:
    # clamp also turns -0.0 from a point mass into 0.0
    return max(0.0, float(stats.entropy(p, base=2)))


def node_walk_probabilities(g: Graph, beta: float) -> NodeProbabilities:
    beta = check_beta(beta)
    s = graph_spectrum(g)
    diagonal = (s.eigenvectors**2) @ shifted_weights(s, beta)
    return NodeProbabilities(beta, diagonal / diagonal.sum())


def walk_entropy(g: Graph, beta: float) -> float:
    return shannon_bits(node_walk_probabilities(g, beta).p)


def principal_probabilities(g: Graph) -> np.ndarray:
    """phi_1(i)^2, the beta -> infinity limit of p_i(beta) for a connected graph."""
    if not is_connected(g):
        raise GraphError("The zero-temperature limit needs a connected graph")
    return graph_spectrum(g).principal_vector ** 2


def zero_temp_walk_entropy(g: Graph) -> float:
    return shannon_bits(principal_probabilities(g))


def spectral_shannon_entropy(g: Graph, beta: float = 1.0) -> float:
    """Entropy of the eigenstate occupation p_j = e^{beta lambda_j} / Z."""
    beta = check_beta(beta)
    return shannon_bits(shifted_weights(graph_spectrum(g), beta))


def _laplacian_density_eigenvalues(
    g: Graph, normalization: VonNeumannNormalization
) -> np.ndarray:
    if normalization is VonNeumannNormalization.NORMALIZED:
        matrix = csgraph.laplacian(g.adjacency(np.float64), normed=True)
    else:
        matrix = laplacian(g)
    values = np.clip(sym_eig(matrix).eigenvalues, 0.0, None)
    values[values < _EIGEN_FLOOR] = 0.0
    if normalization is VonNeumannNormalization.RAW:
        return values
    return values / values.sum()


def von_neumann_entropy(
    g: Graph, normalization: VonNeumannNormalization | str = VonNeumannNormalization.TRACE
) -> float:
    """-sum_j mu_j log2 mu_j over the Laplacian density eigenvalues (0 log 0 = 0).

    ``trace`` uses rho = L / 2m, ``normalized`` the normalized Laplacian over
    its trace, and ``raw`` the unnormalized Laplacian eigenvalues.
    """
    if g.m == 0:
        raise GraphError("Von Neumann entropy needs at least one edge")
    mu = _laplacian_density_eigenvalues(g, VonNeumannNormalization(normalization))
    return float(entr(mu).sum() / _LN2) + 0.0
