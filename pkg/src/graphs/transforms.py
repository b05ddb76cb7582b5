"""Structural queries and transforms: degrees, line graph, tensor product, Laplacian."""

import numpy as np
from scipy.sparse import csgraph, csr_matrix

from src.errors import GraphError
from src.graphs.graph import EdgeList, Graph


def degrees(g: Graph) -> np.ndarray:
    return g.adj.sum(axis=1).astype(np.int64)


def is_regular(g: Graph) -> bool:
    d = degrees(g)
    return bool(np.all(d == d[0]))


def is_connected(g: Graph) -> bool:
    components = csgraph.connected_components(
        csr_matrix(g.adj), directed=False, return_labels=False
    )
    return components == 1


def incidence_matrix(g: Graph) -> tuple[np.ndarray, EdgeList]:
    """Node-edge incidence matrix B (n x m), columns in EdgeList order."""
    edges = g.edges()
    b = np.zeros((g.n, len(edges)), dtype=np.int64)
    for col, (i, j) in enumerate(edges):
        b[i, col] = b[j, col] = 1
    return b, edges


def line_graph(g: Graph) -> tuple[Graph, EdgeList]:
    """Line graph L(g); node v of L(g) is edge ``edges[v]`` of g.

    Built from the incidence matrix: B^T B - 2I counts shared endpoints
    between distinct edges.
    """
    if g.m == 0:
        raise GraphError("Line graph of an edgeless graph is undefined")
    b, edges = incidence_matrix(g)
    shared = b.T @ b
    np.fill_diagonal(shared, 0)
    return Graph.from_adjacency(shared == 1), edges


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Tensor (Kronecker) product; node (a, b) has index a * h.n + b."""
    return Graph(g.n * h.n, np.kron(g.adjacency(), h.adjacency()) != 0)


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian L = D - A."""
    return csgraph.laplacian(g.adjacency(np.float64))


def schur_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Entrywise (Hadamard) product."""
    x, y = np.asarray(x), np.asarray(y)
    if x.shape != y.shape:
        raise ValueError(f"Schur product needs identical shapes, got {x.shape} and {y.shape}")
    return np.multiply(x, y)


def kronecker_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(x), np.asarray(y))
