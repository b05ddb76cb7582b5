"""Corpus scans: graph6 stream in, ordered metrics records out."""

import asyncio
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Callable, Iterable

from src.analysis.records import (
    CSV_SCHEMA_VERSION,
    MetricsRecord,
    compute_record,
    write_records_csv,
)
from src.config import AnalysisConfig
from src.errors import Graph6Error
from src.graphs import Graph, is_connected, iter_graph6_lines, parse_graph6

logger = logging.getLogger(__name__)


@dataclass
class ScanEvent:
    """Event in a scan."""
    type: str
    line: int
    graph6: str | None
    content: str | None
    total: int = 0


@dataclass
class ScanIssue:
    line: int
    graph6: str
    message: str


@dataclass
class ScanSummary:
    records: list[MetricsRecord] = field(default_factory=list)
    skipped: int = 0
    parse_errors: list[ScanIssue] = field(default_factory=list)
    numerical_errors: list[ScanIssue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.parse_errors or self.numerical_errors)


class ScanManager:
    """Parses a corpus, computes one record per connected graph and keeps input order.

    Graphs are processed concurrently in worker threads; results are
    collected positionally so the output does not depend on scheduling.
    """

    def __init__(
        self,
        config: AnalysisConfig | None = None,
        on_event: Callable[[ScanEvent], None] | None = None,
    ):
        self.config = config or AnalysisConfig()
        self.on_event = on_event
        self.events: list[ScanEvent] = []
        self.summary = ScanSummary()

    def _parse(self, lines: Iterable[str]) -> list[tuple[int, str, Graph]]:
        graphs: list[tuple[int, str, Graph]] = []
        for number, text in iter_graph6_lines(lines):
            try:
                g = parse_graph6(text)
            except Graph6Error as e:
                self.summary.parse_errors.append(ScanIssue(number, text, str(e)))
                self._emit("parse_error", number, text, str(e))
                continue
            if not is_connected(g):
                self.summary.skipped += 1
                self._emit("skipped", number, text, "disconnected")
                continue
            graphs.append((number, text, g))
        return graphs

    async def run(self, lines: Iterable[str]) -> ScanSummary:
        """Execute the complete scan."""
        graphs = self._parse(lines)
        self._emit("start", 0, None, None, total=len(graphs))

        semaphore = asyncio.Semaphore(self.config.scan.workers)

        async def process(number: int, text: str, g: Graph) -> MetricsRecord | None:
            async with semaphore:
                try:
                    record = await asyncio.to_thread(compute_record, g, text, self.config.entropy)
                except (ValueError, ArithmeticError) as e:
                    self.summary.numerical_errors.append(ScanIssue(number, text, str(e)))
                    self._emit("numerical_error", number, text, str(e))
                    return None
                self._emit("record", number, text, None)
                return record

        results = await asyncio.gather(*[process(*item) for item in graphs])
        self.summary.records = [r for r in results if r is not None]
        self.summary.numerical_errors.sort(key=lambda issue: issue.line)

        logger.info(
            "Scan finished: %d records, %d skipped, %d parse errors, %d numerical errors",
            len(self.summary.records),
            self.summary.skipped,
            len(self.summary.parse_errors),
            len(self.summary.numerical_errors),
        )
        self._emit("end", 0, None, None, total=len(self.summary.records))
        return self.summary

    def _emit(
        self,
        event_type: str,
        line: int,
        graph6: str | None,
        content: str | None,
        total: int = 0,
    ) -> None:
        event = ScanEvent(type=event_type, line=line, graph6=graph6, content=content, total=total)
        self.events.append(event)
        if self.on_event:
            self.on_event(event)

    def save(self, target: str | Path | IO[str]) -> None:
        """Write the records as CSV (schema version CSV_SCHEMA_VERSION)."""
        logger.debug(
            "Writing %d records, CSV schema v%d", len(self.summary.records), CSV_SCHEMA_VERSION
        )
        write_records_csv(self.summary.records, target, self.config.scan.float_digits)


def scan(
    lines: Iterable[str],
    beta: float = 1.0,
    config: AnalysisConfig | None = None,
    on_event: Callable[[ScanEvent], None] | None = None,
) -> ScanSummary:
    """Synchronous scan of a graph6 stream at inverse temperature ``beta``."""
    config = (config or AnalysisConfig()).model_copy(deep=True)
    config.entropy.beta = beta
    return asyncio.run(ScanManager(config, on_event=on_event).run(lines))
