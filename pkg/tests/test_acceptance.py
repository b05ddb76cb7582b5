"""Reproduction checks on external graph6 corpora (skipped unless the corpus paths are set)."""

import asyncio
from pathlib import Path

import networkx as nx
import pytest

from src.analysis import (
    ScanManager,
    ScanSummary,
    communicability_localization,
    conjecture_scan,
    correlations_report,
    rank_records,
)
from src.config import AnalysisConfig
from src.graphs import degrees, parse_graph6

CORRELATIONS = {
    "s_vn~m": (0.84, 0.05),
    "s_shannon~m": (-0.94, 0.05),
    "s_walk~mean_ipr": (0.43, 0.07),
    "s_vn~mean_ipr": (0.27, 0.07),
}


def scan_file(path: Path) -> ScanSummary:
    config = AnalysisConfig()
    config.scan.progress = False
    with open(path) as f:
        return asyncio.run(ScanManager(config).run(f))


@pytest.fixture(scope="module")
def summary8(corpus8_path):
    return scan_file(corpus8_path)


def test_connected_eight_node_count(summary8):
    assert len(summary8.records) == 11117
    assert summary8.ok


def test_correlations(summary8):
    report = correlations_report(summary8.records)
    assert abs(report.named["s_walk~m"]) == pytest.approx(0.14, abs=0.05)
    for name, (expected, tol) in CORRELATIONS.items():
        assert report.named[name] == pytest.approx(expected, abs=tol)


def test_minimizer_is_clique_with_three_pendants(summary8):
    best = rank_records(summary8.records, "s_walk", "min", top=1)[0]
    g = parse_graph6(best.graph6)
    assert max(len(c) for c in nx.find_cliques(g.to_networkx())) >= 5
    assert int((degrees(g) == 1).sum()) == 3
    # clique weight at least ten times the pendant weight
    report = communicability_localization(g, 1.0)
    assert report.group_ratio >= 10


def test_combined_corpus_count(corpus_le8_path):
    assert len(scan_file(corpus_le8_path).records) == 12113


def test_no_conjecture_counterexamples(corpus8_path):
    with open(corpus8_path) as f:
        assert conjecture_scan(f, beta=1.0, tol=1e-9) == []
