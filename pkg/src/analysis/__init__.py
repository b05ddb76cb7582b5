"""Corpus scans, correlations, extremal search and temperature sweeps."""

from .conjecture import ConjectureCandidate, conjecture_scan, find_candidates
from .extremal import Direction, ExtremalEntry, extremal, rank_by_group, rank_records
from .localization import LocalizationReport, communicability_localization
from .records import (
    CSV_COLUMNS,
    CSV_SCHEMA_VERSION,
    METRIC_FIELDS,
    MetricsRecord,
    compute_record,
    read_records_csv,
    records_to_frame,
    write_records_csv,
)
from .scan import ScanEvent, ScanIssue, ScanManager, ScanSummary, scan
from .stats import NAMED_CORRELATIONS, CorrelationReport, correlations_report, pearson
from .sweep import SweepResult, SweepShape, beta_grid, classify_shape, sweep

__all__ = [
    "CSV_COLUMNS",
    "CSV_SCHEMA_VERSION",
    "METRIC_FIELDS",
    "NAMED_CORRELATIONS",
    "ConjectureCandidate",
    "CorrelationReport",
    "Direction",
    "ExtremalEntry",
    "LocalizationReport",
    "MetricsRecord",
    "ScanEvent",
    "ScanIssue",
    "ScanManager",
    "ScanSummary",
    "SweepResult",
    "SweepShape",
    "beta_grid",
    "classify_shape",
    "communicability_localization",
    "compute_record",
    "conjecture_scan",
    "correlations_report",
    "extremal",
    "find_candidates",
    "pearson",
    "rank_by_group",
    "rank_records",
    "read_records_csv",
    "records_to_frame",
    "scan",
    "sweep",
    "write_records_csv",
]
