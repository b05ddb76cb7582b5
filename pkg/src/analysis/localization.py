"""Where the walker sits: diagonal communicabilities grouped by node."""

from dataclasses import dataclass

import numpy as np

from src.graphs import Graph, degrees
from src.spectra import communicability


@dataclass(frozen=True, eq=False)
class LocalizationReport:
    beta: float
    diagonal: np.ndarray
    degrees: np.ndarray

    @property
    def ratio(self) -> float:
        """max G_pp / min G_pp over single nodes."""
        return float(self.diagonal.max() / self.diagonal.min())

    @property
    def pendant_nodes(self) -> list[int]:
        return np.flatnonzero(self.degrees == 1).tolist()

    @property
    def group_ratio(self) -> float | None:
        """Total G_pp on non-pendant nodes over total G_pp on pendant nodes."""
        pendant = self.degrees == 1
        if not pendant.any() or pendant.all():
            return None
        return float(self.diagonal[~pendant].sum() / self.diagonal[pendant].sum())

    def by_degree(self) -> dict[int, list[tuple[int, float]]]:
        groups: dict[int, list[tuple[int, float]]] = {}
        for node, (d, value) in enumerate(zip(self.degrees.tolist(), self.diagonal.tolist())):
            groups.setdefault(d, []).append((node, value))
        return dict(sorted(groups.items()))


def communicability_localization(g: Graph, beta: float) -> LocalizationReport:
    return LocalizationReport(beta, communicability(g, beta).diagonal.copy(), degrees(g))
