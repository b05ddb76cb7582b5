"""Dense symmetric eigendecomposition with a deterministic sign convention."""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.errors import SpectralError
from src.graphs import Graph

SYMMETRY_TOL = 1e-12
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order; column j of ``eigenvectors`` pairs with eigenvalues[j]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def principal_value(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def principal_vector(self) -> np.ndarray:
        return self.eigenvectors[:, 0]

    @property
    def spectral_gap(self) -> float:
        if self.n < 2:
            return float("inf")
        return float(self.eigenvalues[0] - self.eigenvalues[1])


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # principal vector: nonnegative sum; others: first largest-magnitude entry positive
    fixed = vectors.copy()
    if fixed[:, 0].sum() < 0:
        fixed[:, 0] *= -1
    for j in range(1, fixed.shape[1]):
        pivot = int(np.argmax(np.abs(fixed[:, j])))
        if fixed[pivot, j] < 0:
            fixed[:, j] *= -1
    return fixed


def sym_eig(matrix: np.ndarray) -> Spectrum:
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectralError(f"Expected a square matrix, got shape {m.shape}")
    asymmetry = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    if asymmetry > SYMMETRY_TOL:
        raise SpectralError(f"Matrix is not symmetric (max asymmetry {asymmetry:.3e})")

    values, vectors = np.linalg.eigh(m)
    order = np.argsort(values, kind="stable")[::-1]
    values, vectors = values[order], _fix_signs(vectors[:, order])

    n = len(values)
    scale = max(float(np.max(np.abs(m))), 1.0) if m.size else 1.0
    residual = np.max(np.abs(m - (vectors * values) @ vectors.T)) if n else 0.0
    if residual > RESIDUAL_TOL * n * scale:
        raise SpectralError(f"Eigendecomposition residual {residual:.3e} exceeds tolerance")
    if n and np.max(np.abs(vectors.T @ vectors - np.eye(n))) > RESIDUAL_TOL:
        raise SpectralError("Eigenvectors are not orthonormal")

    values.setflags(write=False)
    vectors.setflags(write=False)
    return Spectrum(values, vectors)


@lru_cache(maxsize=8192)
def graph_spectrum(g: Graph) -> Spectrum:
    """Adjacency spectrum of g, memoized per graph."""
    return sym_eig(g.adjacency(np.float64))
