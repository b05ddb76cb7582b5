"""Walk entropies of graphs and line graphs, and the comparison entropies."""

from .edge import (
    EdgeProbabilities,
    edge_walk_entropy,
    edge_walk_probabilities,
    edge_walk_probabilities_from_energy,
    line_walk_entropy_direct,
    zero_temp_edge_entropy,
    zero_temp_edge_probabilities,
)
from .tensor import (
    LineTensorEntropyReport,
    TensorEntropyReport,
    line_entropy_tensor_check,
    walk_entropy_tensor_check,
)
from .walk import (
    NodeProbabilities,
    VonNeumannNormalization,
    node_walk_probabilities,
    principal_probabilities,
    shannon_bits,
    spectral_shannon_entropy,
    von_neumann_entropy,
    walk_entropy,
    zero_temp_walk_entropy,
)

__all__ = [
    "EdgeProbabilities",
    "LineTensorEntropyReport",
    "NodeProbabilities",
    "TensorEntropyReport",
    "VonNeumannNormalization",
    "edge_walk_entropy",
    "edge_walk_probabilities",
    "edge_walk_probabilities_from_energy",
    "line_entropy_tensor_check",
    "line_walk_entropy_direct",
    "node_walk_probabilities",
    "principal_probabilities",
    "shannon_bits",
    "spectral_shannon_entropy",
    "von_neumann_entropy",
    "walk_entropy",
    "walk_entropy_tensor_check",
    "zero_temp_edge_entropy",
    "zero_temp_edge_probabilities",
    "zero_temp_walk_entropy",
]
