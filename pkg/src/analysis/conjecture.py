"""Search for graphs of maximal walk entropy that are not walk-regular."""

import logging
import math
from dataclasses import dataclass
from typing import Iterable

from src.analysis.records import MetricsRecord
from src.analysis.scan import scan
from src.config import AnalysisConfig
from src.regularity import GraphClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjectureCandidate:
    graph6: str
    n: int
    s_walk: float
    graph_class: GraphClass

    @property
    def gap(self) -> float:
        return math.log2(self.n) - self.s_walk


def find_candidates(
    records: Iterable[MetricsRecord], tol: float = 1e-9
) -> list[ConjectureCandidate]:
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    candidates = [
        ConjectureCandidate(r.graph6, r.n, r.s_walk, r.graph_class)
        for r in records
        if abs(r.s_walk - math.log2(r.n)) <= tol and r.graph_class is not GraphClass.WALK_REGULAR
    ]
    for c in candidates:
        logger.warning(
            "Maximal entropy without walk regularity: %s (%s)", c.graph6, c.graph_class.value
        )
    return candidates


def conjecture_scan(
    corpus: Iterable[str],
    beta: float = 1.0,
    tol: float = 1e-9,
    config: AnalysisConfig | None = None,
) -> list[ConjectureCandidate]:
    return find_candidates(scan(corpus, beta=beta, config=config).records, tol)
