"""Exhaustive enumeration of small graphs up to isomorphism.

Each isomorphism class is represented by its canonical relabeling: the
relabeling, among all n! of them, whose upper-triangle bitstring (graph6
column order, first pair most significant) is lexicographically smallest.
Representatives on n nodes are grown from the representatives on n - 1 nodes
by attaching a new vertex to every subset of the old ones.
"""

import itertools
import logging
from functools import lru_cache
from typing import Iterator

import numpy as np

from src.errors import GraphError
from src.graphs.graph import Graph
from src.graphs.transforms import degrees

logger = logging.getLogger(__name__)

MAX_ENUMERATION_NODES = 7
_SLOW_NODES = 7
_BATCH = 4096


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> np.ndarray:
    """Every relabeling (new position -> old vertex) of n vertices."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    perms.flags.writeable = False
    return perms


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    j_idx, i_idx = np.tril_indices(n, k=-1)
    weights = np.array([1 << (len(i_idx) - 1 - t) for t in range(len(i_idx))], dtype=object)
    return i_idx, j_idx, weights


def canonical_relabeling(g: Graph) -> tuple[int, np.ndarray]:
    """Return (canonical key, permutation) for g.

    The permutation maps new position to old vertex; the key is the integer
    value of the relabeled upper-triangle bitstring. Cost grows as n!, so
    this is meant for n <= 8.
    """
    if g.n == 1:
        return 0, np.zeros(1, dtype=np.int64)
    i_idx, j_idx, weights = _pair_weights(g.n)
    perms = _all_permutations(g.n)

    best_key: int | None = None
    best_perm = perms[0]
    for start in range(0, len(perms), _BATCH):
        batch = perms[start:start + _BATCH]
        bits = g.adj[batch[:, i_idx], batch[:, j_idx]]
        # lexicographic minimum over rows of a 0/1 matrix
        order = np.lexsort(bits.T[::-1])
        row = int(order[0])
        key = int(bits[row].astype(object) @ weights)
        if best_key is None or key < best_key:
            best_key, best_perm = key, batch[row].copy()
    return best_key, best_perm


def canonical_form(g: Graph) -> int:
    return canonical_relabeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, perm = canonical_relabeling(g)
    return Graph(g.n, g.adj[np.ix_(perm, perm)])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if not np.array_equal(np.sort(degrees(g)), np.sort(degrees(h))):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _representatives(n: int, connected: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)

    found: dict[int, Graph] = {}
    for base in _representatives(n - 1, connected):
        for mask in range(1 << (n - 1)):
            if connected and mask == 0:
                continue
            adj = np.zeros((n, n), dtype=bool)
            adj[: n - 1, : n - 1] = base.adj
            neighbors = [v for v in range(n - 1) if mask >> v & 1]
            adj[n - 1, neighbors] = adj[neighbors, n - 1] = True
            candidate = Graph(n, adj)
            key, perm = canonical_relabeling(candidate)
            if key not in found:
                found[key] = Graph(n, candidate.adj[np.ix_(perm, perm)])

    logger.debug("Enumerated %d graphs on %d nodes (connected=%s)", len(found), n, connected)
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class, in canonical-key order.

    Every connected graph on n nodes has a vertex whose removal leaves it
    connected, so connected classes grow from connected classes only.
    """
    if not 1 <= n <= MAX_ENUMERATION_NODES:
        raise GraphError(
            f"Enumeration supports 1 <= n <= {MAX_ENUMERATION_NODES}, got {n}; "
            "ingest larger corpora from graph6 files"
        )
    if n >= _SLOW_NODES:
        logger.warning("Enumerating graphs on %d nodes is slow (minutes, not seconds)", n)
    return iter(_representatives(n, connected))


def enumerate_connected(n: int) -> Iterator[Graph]:
    return enumerate_graphs(n, connected=True)
