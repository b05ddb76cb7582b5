"""Exact closed-walk counts from integer powers of the adjacency matrix."""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from src.errors import GraphError, WalkCountOverflowError
from src.graphs import Graph, degrees

_INT64_LIMIT = 2**63


@dataclass(frozen=True, eq=False)
class DiagPowerProfile:
    """Row k holds (A^k)_pp for every node p, k = 0..kmax."""

    rows: np.ndarray

    @property
    def kmax(self) -> int:
        return len(self.rows) - 1

    def row_is_constant(self, k: int) -> bool:
        row = self.rows[k]
        return bool(np.all(row == row[0]))

    def is_constant(self) -> bool:
        return all(self.row_is_constant(k) for k in range(len(self.rows)))


def exact_powers(g: Graph, kmax: int, allow_bigint: bool = False) -> Iterator[np.ndarray]:
    """Yield A^0, A^1, ..., A^kmax with exact integer entries.

    Entries of A^k are bounded by (max degree)^k. Once that bound reaches
    2^63 the powers are either promoted to Python integers (``allow_bigint``)
    or a WalkCountOverflowError is raised.
    """
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")
    a = g.adjacency(np.int64)
    max_degree = int(degrees(g).max())
    power = np.eye(g.n, dtype=np.int64)
    yield power
    for k in range(1, kmax + 1):
        if power.dtype != object and max_degree**k >= _INT64_LIMIT:
            if not allow_bigint:
                raise WalkCountOverflowError(
                    f"Walk counts of length {k} may exceed 64-bit integers"
                    f" (max degree {max_degree})"
                )
            power, a = power.astype(object), a.astype(object)
        power = power @ a
        yield power


def diag_power_profile(g: Graph, kmax: int, allow_bigint: bool = False) -> DiagPowerProfile:
    rows = [np.diag(power).copy() for power in exact_powers(g, kmax, allow_bigint)]
    dtype = object if any(r.dtype == object for r in rows) else np.int64
    return DiagPowerProfile(np.array(rows, dtype=dtype))


def is_walk_regular(g: Graph) -> bool:
    """(A^k)_pp independent of p for k = 0..n-1, which covers every k by Cayley-Hamilton."""
    for power in exact_powers(g, g.n - 1, allow_bigint=True):
        diagonal = np.diag(power)
        if not np.all(diagonal == diagonal[0]):
            return False
    return True


def is_edge_walk_regular(g: Graph) -> bool:
    """A o A^k = alpha_k A for k = 0..n-1: (A^k)_ij takes one value over all edges (i, j)."""
    if g.m == 0:
        raise GraphError("Edge walk regularity needs at least one edge")
    edges = g.edges()
    rows = np.array([i for i, _ in edges])
    cols = np.array([j for _, j in edges])
    for power in exact_powers(g, g.n - 1, allow_bigint=True):
        values = power[rows, cols]
        if not np.all(values == values[0]):
            return False
    return True
