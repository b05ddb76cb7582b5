"""Eigendecomposition, communicability, partition function and IPR."""

from .ipr import ipr, mean_ipr, state_ipr
from .spectrum import Spectrum, graph_spectrum, sym_eig
from .thermal import (
    MAX_BETA,
    Communicability,
    average_energy,
    check_beta,
    communicability,
    communicability_series,
    partition_function,
    scaled_communicability,
    shifted_weights,
)

__all__ = [
    "MAX_BETA",
    "Communicability",
    "Spectrum",
    "average_energy",
    "check_beta",
    "communicability",
    "communicability_series",
    "graph_spectrum",
    "ipr",
    "mean_ipr",
    "partition_function",
    "scaled_communicability",
    "shifted_weights",
    "state_ipr",
    "sym_eig",
]
