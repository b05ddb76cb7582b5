"""Extremal graphs of a corpus for any record metric."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from src.analysis.records import METRIC_FIELDS, MetricsRecord
from src.analysis.scan import scan
from src.config import AnalysisConfig


class Direction(str, Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class ExtremalEntry:
    graph6: str
    value: float
    n: int
    m: int


def rank_records(
    records: Iterable[MetricsRecord],
    metric: str,
    direction: Direction | str = Direction.MIN,
    top: int | None = None,
) -> list[ExtremalEntry]:
    """Records sorted by ``metric`` (ties by graph6), records lacking the metric dropped."""
    if metric not in METRIC_FIELDS:
        raise ValueError(f"Unknown metric {metric!r}; expected one of {', '.join(METRIC_FIELDS)}")
    direction = Direction(direction)
    entries = [
        ExtremalEntry(r.graph6, value, r.n, r.m)
        for r in records
        if (value := r.metric(metric)) is not None
    ]
    if not entries:
        raise ValueError("Empty corpus: nothing to rank")
    sign = 1.0 if direction is Direction.MIN else -1.0
    entries.sort(key=lambda e: (sign * e.value, e.graph6))
    return entries[:top] if top else entries


def rank_by_group(
    records: Iterable[MetricsRecord],
    metric: str,
    direction: Direction | str = Direction.MIN,
    top: int | None = None,
    group_by: str = "m",
) -> dict[int, list[ExtremalEntry]]:
    """Ranking within each group of equal node count (``n``) or edge count (``m``)."""
    if group_by not in ("n", "m"):
        raise ValueError(f"group_by must be 'n' or 'm', got {group_by!r}")
    groups: dict[int, list[ExtremalEntry]] = {}
    for entry in rank_records(records, metric, direction):
        members = groups.setdefault(getattr(entry, group_by), [])
        if top is None or len(members) < top:
            members.append(entry)
    return dict(sorted(groups.items()))


def extremal(
    corpus: Iterable[str],
    metric: str,
    direction: Direction | str = Direction.MIN,
    beta: float = 1.0,
    top: int | None = 10,
    config: AnalysisConfig | None = None,
) -> list[ExtremalEntry]:
    """Scan a graph6 corpus at ``beta`` and rank its graphs by ``metric``."""
    summary = scan(corpus, beta=beta, config=config)
    return rank_records(summary.records, metric, direction, top)
