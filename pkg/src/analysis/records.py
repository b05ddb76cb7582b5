"""Per-graph metrics records and their CSV form."""

import math
from pathlib import Path
from typing import IO, Iterable

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import EntropyConfig
from src.entropy import (
    edge_walk_entropy,
    line_walk_entropy_direct,
    spectral_shannon_entropy,
    von_neumann_entropy,
    walk_entropy,
    zero_temp_edge_entropy,
    zero_temp_walk_entropy,
)
from src.graphs import Graph
from src.regularity import GraphClass, classify
from src.spectra import graph_spectrum, mean_ipr

CSV_SCHEMA_VERSION = 1
CSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "class",
    "s_walk",
    "s_walk_inf",
    "s_edge",
    "s_edge_inf",
    "s_line_direct",
    "s_vn",
    "s_shannon",
    "mean_ipr",
)
METRIC_FIELDS = tuple(c for c in CSV_COLUMNS if c not in ("graph6", "class"))
_BOUND_TOL = 1e-9


class MetricsRecord(BaseModel):
    """All computed quantities of one graph. Edge-based fields are None when m = 0."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    graph6: str
    n: int = Field(ge=1)
    m: int = Field(ge=0)
    graph_class: GraphClass = Field(alias="class")
    s_walk: float
    s_walk_inf: float
    s_edge: float | None = None
    s_edge_inf: float | None = None
    s_line_direct: float | None = None
    s_vn: float | None = None
    s_shannon: float
    mean_ipr: float

    @model_validator(mode="after")
    def check_bounds(self) -> "MetricsRecord":
        if self.s_walk > math.log2(self.n) + _BOUND_TOL:
            raise ValueError(f"s_walk={self.s_walk} exceeds log2(n) for {self.graph6}")
        if self.s_edge is not None and self.s_edge > math.log2(self.m) + _BOUND_TOL:
            raise ValueError(f"s_edge={self.s_edge} exceeds log2(m) for {self.graph6}")
        if not 1 - _BOUND_TOL <= self.mean_ipr <= self.n + _BOUND_TOL:
            raise ValueError(f"mean_ipr={self.mean_ipr} outside [1, n] for {self.graph6}")
        return self

    def metric(self, name: str) -> float | None:
        if name not in METRIC_FIELDS:
            raise ValueError(f"Unknown metric {name!r}; expected one of {', '.join(METRIC_FIELDS)}")
        value = getattr(self, name)
        return None if value is None else float(value)

    def row(self) -> dict:
        return self.model_dump(by_alias=True, mode="json")


def compute_record(g: Graph, graph6: str, config: EntropyConfig | None = None) -> MetricsRecord:
    """Compute every metric of a connected graph."""
    config = config or EntropyConfig()
    has_edges = g.m > 0
    return MetricsRecord(
        graph6=graph6,
        n=g.n,
        m=g.m,
        graph_class=classify(g),
        s_walk=walk_entropy(g, config.beta),
        s_walk_inf=zero_temp_walk_entropy(g),
        s_edge=edge_walk_entropy(g, config.beta) if has_edges else None,
        s_edge_inf=zero_temp_edge_entropy(g) if has_edges else None,
        s_line_direct=line_walk_entropy_direct(g, config.beta) if has_edges else None,
        s_vn=von_neumann_entropy(g, config.vn_normalization) if has_edges else None,
        s_shannon=spectral_shannon_entropy(g, config.shannon_beta),
        mean_ipr=mean_ipr(graph_spectrum(g)),
    )


def records_to_frame(records: Iterable[MetricsRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.row() for r in records], columns=list(CSV_COLUMNS))
    floats = [c for c in METRIC_FIELDS if c not in ("n", "m")]
    frame[floats] = frame[floats].astype(np.float64)
    return frame


def write_records_csv(
    records: Iterable[MetricsRecord], target: str | Path | IO[str], float_digits: int = 12
) -> None:
    """Write records with a fixed header and LF line endings."""
    records_to_frame(records).to_csv(
        target, index=False, float_format=f"%.{float_digits}g", lineterminator="\n"
    )


def read_records_csv(source: str | Path | IO[str]) -> list[MetricsRecord]:
    frame = pd.read_csv(source, dtype={"graph6": str}, keep_default_na=False, na_values=[""])
    missing = [c for c in CSV_COLUMNS if c not in frame.columns]
    if missing:
        raise ValueError(f"CSV is missing columns: {', '.join(missing)}")
    records = []
    for row in frame[list(CSV_COLUMNS)].to_dict(orient="records"):
        row = {k: None if isinstance(v, float) and math.isnan(v) else v for k, v in row.items()}
        row["n"], row["m"] = int(row["n"]), int(row["m"])
        records.append(MetricsRecord.model_validate(row))
    return records
