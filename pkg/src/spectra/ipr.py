"""Inverse participation ratios of eigenstates."""

import numpy as np

from src.spectra.spectrum import Spectrum


def state_ipr(state: np.ndarray) -> float:
    """I = (sum_p |phi(p)|^4)^{-1} for a state normalized on the fly; 1 is fully localized."""
    psi = np.abs(np.asarray(state, dtype=np.float64))
    psi = psi / np.sqrt(np.sum(psi**2))
    return float(1.0 / np.sum(psi**4))


def ipr(spectrum: Spectrum) -> np.ndarray:
    """I_j for every eigenstate, in eigenvalue order."""
    return 1.0 / np.sum(np.abs(spectrum.eigenvectors) ** 4, axis=0)


def mean_ipr(spectrum: Spectrum) -> float:
    return float(np.mean(ipr(spectrum)))
