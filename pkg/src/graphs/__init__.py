"""Graph representation, graph6 codec, enumeration and structural transforms."""

from .enumeration import (
    MAX_ENUMERATION_NODES,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    enumerate_graphs,
)
from .graph import EdgeList, Graph
from .graph6 import iter_graph6_lines, parse_graph6, read_graph6, write_graph6
from .transforms import (
    degrees,
    incidence_matrix,
    is_connected,
    is_regular,
    kronecker_product,
    laplacian,
    line_graph,
    schur_product,
    tensor_product,
)

__all__ = [
    "MAX_ENUMERATION_NODES",
    "EdgeList",
    "Graph",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "degrees",
    "enumerate_connected",
    "enumerate_graphs",
    "incidence_matrix",
    "is_connected",
    "is_regular",
    "iter_graph6_lines",
    "kronecker_product",
    "laplacian",
    "line_graph",
    "parse_graph6",
    "read_graph6",
    "schur_product",
    "tensor_product",
    "write_graph6",
]
