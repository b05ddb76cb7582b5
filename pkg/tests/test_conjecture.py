import logging
import math

import pytest

from src.analysis import MetricsRecord, conjecture_scan, find_candidates
from src.graphs import enumerate_graphs, write_graph6
from src.regularity import GraphClass


def fake_record(graph_class: GraphClass, s_walk: float, n: int = 4) -> MetricsRecord:
    return MetricsRecord(
        graph6="C~",
        n=n,
        m=6,
        graph_class=graph_class,
        s_walk=s_walk,
        s_walk_inf=s_walk,
        s_shannon=1.0,
        mean_ipr=2.0,
    )


def test_small_corpus_has_no_candidates():
    corpus = [write_graph6(g) for n in range(1, 7) for g in enumerate_graphs(n)]
    assert conjecture_scan(corpus, beta=1.0, tol=1e-9) == []


def test_p3_is_not_listed():
    assert conjecture_scan(["Bg"]) == []


def test_walk_regular_graphs_are_never_listed():
    assert find_candidates([fake_record(GraphClass.WALK_REGULAR, 2.0)]) == []


def test_candidate_is_reported(caplog):
    record = fake_record(GraphClass.REGULAR_NOT_WALK_REGULAR, 2.0 - 1e-12)
    with caplog.at_level(logging.WARNING):
        candidates = find_candidates([record], tol=1e-9)
    assert len(candidates) == 1
    assert candidates[0].gap == pytest.approx(1e-12, abs=1e-13)
    assert "C~" in caplog.text


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        find_candidates([], tol=0.0)


def test_below_maximum_is_ignored():
    record = fake_record(GraphClass.NON_REGULAR, math.log2(4) - 1e-3)
    assert find_candidates([record]) == []
