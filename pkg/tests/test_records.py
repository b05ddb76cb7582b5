import io
import math

import pytest
from pydantic import ValidationError

from src.analysis import (
    CSV_COLUMNS,
    METRIC_FIELDS,
    MetricsRecord,
    compute_record,
    read_records_csv,
    records_to_frame,
    write_records_csv,
)
from src.config import EntropyConfig
from src.graphs import Graph, enumerate_graphs, write_graph6
from src.graphs import families
from src.regularity import GraphClass


def record_of(g: Graph, **config) -> MetricsRecord:
    return compute_record(g, write_graph6(g), EntropyConfig(**config))


def test_p3_record(p3):
    r = record_of(p3)
    assert (r.graph6, r.n, r.m) == ("Bg", 3, 2)
    assert r.graph_class is GraphClass.NON_REGULAR
    assert r.s_walk == pytest.approx(1.5681, abs=1e-4)
    assert r.s_walk_inf == pytest.approx(1.5)
    assert r.s_edge == pytest.approx(1.0)
    assert r.s_edge_inf == pytest.approx(1.0)
    assert r.s_line_direct == pytest.approx(1.0)


def test_single_node_has_empty_edge_fields():
    r = record_of(Graph.empty(1))
    assert r.m == 0
    assert r.s_walk == 0.0
    assert r.s_edge is None and r.s_edge_inf is None
    assert r.s_line_direct is None and r.s_vn is None
    assert r.mean_ipr == pytest.approx(1.0)


def test_beta_comes_from_config(p3):
    assert record_of(p3, beta=0.0).s_walk == pytest.approx(math.log2(3))


def test_bounds_are_validated():
    with pytest.raises(ValidationError):
        MetricsRecord(
            graph6="Bw",
            n=3,
            m=3,
            graph_class=GraphClass.WALK_REGULAR,
            s_walk=2.0,
            s_walk_inf=1.0,
            s_shannon=1.0,
            mean_ipr=2.0,
        )


def test_class_alias(k3):
    row = record_of(k3).row()
    assert row["class"] == "WalkRegular"
    assert list(row) == list(CSV_COLUMNS)


def test_metric_lookup(k3):
    r = record_of(k3)
    assert r.metric("m") == 3.0
    with pytest.raises(ValueError):
        r.metric("class")


def test_csv_header_and_line_endings(p3):
    out = io.StringIO()
    write_records_csv([record_of(Graph.empty(1)), record_of(p3)], out)
    text = out.getvalue()
    assert "\r" not in text
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1].startswith("@,1,0,WalkRegular,0,0,,,,,")
    assert text.endswith("\n")


def test_twelve_significant_digits(p3):
    out = io.StringIO()
    write_records_csv([record_of(p3)], out)
    s_walk = out.getvalue().split("\n")[1].split(",")[4]
    assert len(s_walk.replace(".", "").lstrip("0")) <= 12
    assert float(s_walk) == pytest.approx(record_of(p3).s_walk, rel=1e-11)


def test_csv_read_back(p3):
    records = [record_of(Graph.empty(1)), record_of(p3), record_of(families.cycle(4))]
    out = io.StringIO()
    write_records_csv(records, out)
    back = read_records_csv(io.StringIO(out.getvalue()))
    assert [r.graph6 for r in back] == [r.graph6 for r in records]
    assert back[0].s_edge is None
    assert back[2].graph_class is GraphClass.WALK_REGULAR
    assert back[1].s_walk == pytest.approx(records[1].s_walk, rel=1e-11)


def test_csv_missing_columns():
    with pytest.raises(ValueError, match="missing"):
        read_records_csv(io.StringIO("graph6,n\nA_,2\n"))


def test_frame_columns_are_numeric():
    records = [record_of(g) for g in enumerate_graphs(3)] + [record_of(Graph.empty(1))]
    frame = records_to_frame(records)
    assert list(frame.columns) == list(CSV_COLUMNS)
    for name in METRIC_FIELDS:
        assert frame[name].dtype.kind in "if"
