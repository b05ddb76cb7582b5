"""Simple undirected graphs backed by a dense boolean adjacency matrix."""

from dataclasses import dataclass
from typing import Iterable

import networkx as nx
import numpy as np

from src.errors import GraphError

# Unordered node pairs (i, j), i < j, in lexicographic order.
EdgeList = tuple[tuple[int, int], ...]


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple graph on nodes 0..n-1.

    The adjacency matrix is symmetric, boolean, with a zero diagonal. It is
    stored read-only so a Graph can be hashed and shared between threads.
    """

    n: int
    adj: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"Node count must be positive, got {self.n}")
        adj = np.array(self.adj, dtype=bool, copy=True)
        if adj.shape != (self.n, self.n):
            raise GraphError(f"Adjacency shape {adj.shape} does not match n={self.n}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("Adjacency matrix is not symmetric")
        if adj.diagonal().any():
            raise GraphError("Self-loops are not allowed")
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, n), dtype=bool))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            if i == j:
                raise GraphError(f"Self-loop on node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"Edge ({i}, {j}) out of range for n={n}")
            adj[i, j] = adj[j, i] = True
        return cls(n, adj)

    @classmethod
    def from_adjacency(cls, matrix: np.ndarray) -> "Graph":
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise GraphError(f"Adjacency must be square, got shape {matrix.shape}")
        return cls(matrix.shape[0], matrix != 0)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabeling nodes in sorted order."""
        nodes = sorted(graph.nodes())
        if not nodes:
            raise GraphError("Graph has no nodes")
        matrix = nx.to_numpy_array(graph, nodelist=nodes, weight=None, dtype=int)
        np.fill_diagonal(matrix, 0)
        return cls.from_adjacency(matrix)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def m(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> EdgeList:
        rows, cols = np.nonzero(np.triu(self.adj, k=1))
        return tuple(zip(rows.tolist(), cols.tolist()))

    def adjacency(self, dtype: type = np.int64) -> np.ndarray:
        """Return a writable copy of the adjacency matrix in the given dtype."""
        return self.adj.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
