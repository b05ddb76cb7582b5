"""Pearson correlations between per-graph metrics."""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import pandas as pd
from scipy import stats

from src.analysis.records import METRIC_FIELDS, MetricsRecord, records_to_frame

# (x, y) pairs whose correlation the walk-entropy analysis quotes
NAMED_CORRELATIONS: dict[str, tuple[str, str]] = {
    "s_walk~m": ("s_walk", "m"),
    "s_vn~m": ("s_vn", "m"),
    "s_shannon~m": ("s_shannon", "m"),
    "s_walk~mean_ipr": ("s_walk", "mean_ipr"),
    "s_vn~mean_ipr": ("s_vn", "mean_ipr"),
}


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson product-moment coefficient."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"Vectors differ in length: {len(x)} and {len(y)}")
    if len(x) < 2:
        raise ValueError("Pearson correlation needs at least two observations")
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise ValueError("Correlation is undefined for a constant vector")
    return float(np.clip(stats.pearsonr(x, y).statistic, -1.0, 1.0))


@dataclass
class CorrelationReport:
    named: dict[str, float | None]
    matrix: pd.DataFrame
    count: int

    def named_frame(self) -> pd.DataFrame:
        rows = [
            {"name": name, "x": x, "y": y, "r": self.named[name]}
            for name, (x, y) in NAMED_CORRELATIONS.items()
        ]
        return pd.DataFrame(rows, columns=["name", "x", "y", "r"])


def correlations_report(records: Iterable[MetricsRecord]) -> CorrelationReport:
    """Named coefficients plus the full metric-metric matrix.

    Rows missing either value (edge metrics of K1) are dropped pairwise;
    undefined coefficients are reported as None (NaN in the matrix).
    """
    frame = records_to_frame(records)
    if len(frame) < 2:
        raise ValueError(f"Correlations need at least two records, got {len(frame)}")
    metrics = frame[list(METRIC_FIELDS)].astype(np.float64)

    named: dict[str, float | None] = {}
    for name, (x, y) in NAMED_CORRELATIONS.items():
        pair = metrics[[x, y]].dropna()
        try:
            named[name] = pearson(pair[x], pair[y])
        except ValueError:
            named[name] = None
    return CorrelationReport(named=named, matrix=metrics.corr(method="pearson"), count=len(frame))
