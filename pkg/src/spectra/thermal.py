"""Communicability e^{beta A}, partition function and average energy.

The raw exponential and Z are computed for beta in [0, MAX_BETA]. Everything
that is a ratio of exponentials (probabilities, average energy) goes through
``shifted_weights``, e^{beta (lambda_j - lambda_1)}, and accepts any beta >= 0.
"""

from dataclasses import dataclass

import numpy as np

from src.errors import BetaRangeError
from src.graphs import Graph
from src.spectra.spectrum import Spectrum, graph_spectrum

MAX_BETA = 50.0
SERIES_TOL = 1e-16
_MAX_SERIES_TERMS = 10_000


@dataclass(frozen=True, eq=False)
class Communicability:
    """The matrix e^{beta A}; entry (p, q) weighs all walks from p to q."""

    beta: float
    matrix: np.ndarray

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.matrix)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))


def check_beta(beta: float, upper: bool = False) -> float:
    beta = float(beta)
    if not np.isfinite(beta) or beta < 0:
        raise BetaRangeError(f"Inverse temperature must be finite and >= 0, got {beta}")
    if upper and beta > MAX_BETA:
        raise BetaRangeError(
            f"beta={beta} exceeds {MAX_BETA}; use the zero-temperature closed forms instead"
        )
    return beta


def shifted_weights(spectrum: Spectrum, beta: float) -> np.ndarray:
    """Spectral weights e^{beta (lambda_j - lambda_1)}, i.e. up to the factor e^{beta lambda_1}."""
    return np.exp(beta * (spectrum.eigenvalues - spectrum.principal_value))


def scaled_communicability(g: Graph, beta: float) -> np.ndarray:
    """e^{beta A} / e^{beta lambda_1}, finite for every beta >= 0."""
    beta = check_beta(beta)
    s = graph_spectrum(g)
    matrix = (s.eigenvectors * shifted_weights(s, beta)) @ s.eigenvectors.T
    return (matrix + matrix.T) / 2


def communicability(g: Graph, beta: float) -> Communicability:
    beta = check_beta(beta, upper=True)
    s = graph_spectrum(g)
    matrix = (s.eigenvectors * np.exp(beta * s.eigenvalues)) @ s.eigenvectors.T
    return Communicability(beta, (matrix + matrix.T) / 2)


def communicability_series(g: Graph, beta: float) -> np.ndarray:
    """Truncated power series sum_k beta^k A^k / k!, the independent oracle for e^{beta A}.

    Terms are added until the bound beta^k ||A||^k / k! drops below
    SERIES_TOL times the trace of the partial sum.
    """
    beta = check_beta(beta, upper=True)
    a = g.adjacency(np.float64)
    norm = float(np.max(a.sum(axis=1))) if g.m else 0.0
    term = np.eye(g.n)
    total = term.copy()
    bound = 1.0
    for k in range(1, _MAX_SERIES_TERMS):
        term = term @ a * (beta / k)
        total += term
        bound *= beta * norm / k
        if bound < SERIES_TOL * np.trace(total):
            break
    return total


def partition_function(g: Graph, beta: float) -> float:
    """Z = tr e^{beta A} = sum_j e^{beta lambda_j}."""
    beta = check_beta(beta, upper=True)
    return float(np.exp(beta * graph_spectrum(g).eigenvalues).sum())


def average_energy(g: Graph, beta: float) -> float:
    """<E> = -(1/Z) dZ/dbeta = -sum_j lambda_j e^{beta lambda_j} / Z."""
    beta = check_beta(beta)
    s = graph_spectrum(g)
    w = shifted_weights(s, beta)
    return float(-(s.eigenvalues * w).sum() / w.sum())
