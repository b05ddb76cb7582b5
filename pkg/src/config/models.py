"""Configuration for walk-entropy analyses."""

from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, Field, model_validator

from src.entropy import VonNeumannNormalization


class EntropyConfig(BaseModel):
    """Parameters of the per-graph entropy computations."""

    beta: float = Field(
        default=1.0, ge=0.0, description="Inverse temperature for s_walk and s_edge"
    )
    shannon_beta: float = Field(
        default=1.0, ge=0.0, description="Inverse temperature of the spectral Shannon entropy"
    )
    vn_normalization: VonNeumannNormalization = Field(
        default=VonNeumannNormalization.TRACE,
        description="Density matrix of the von Neumann entropy: trace, raw or normalized",
    )


class ScanConfig(BaseModel):
    """Corpus scan execution."""

    workers: int = Field(default=4, ge=1, le=64, description="Graphs processed concurrently")
    float_digits: int = Field(
        default=12, ge=6, le=17, description="Significant digits of floats in CSV output"
    )
    progress: bool = Field(default=True, description="Show a progress bar on stderr")


class SweepConfig(BaseModel):
    """Temperature sweep grid."""

    beta_min: float = Field(default=1e-3, gt=0.0, description="Smallest inverse temperature")
    beta_max: float = Field(default=1e2, gt=0.0, description="Largest inverse temperature")
    points: int = Field(default=200, ge=3, description="Grid points")
    log_spacing: bool = Field(default=True, description="Logarithmic (true) or linear grid")
    entropy: Literal["node", "edge"] = Field(
        default="node", description="Sweep the node walk entropy or the edge walk entropy"
    )

    @model_validator(mode="after")
    def check_range(self) -> "SweepConfig":
        if self.beta_min >= self.beta_max:
            raise ValueError(f"beta_min ({self.beta_min}) must be below beta_max ({self.beta_max})")
        return self


class ExtremalConfig(BaseModel):
    """Extremal graph search."""

    top: int = Field(default=10, ge=1, description="Number of ranked graphs to report")


class ConjectureConfig(BaseModel):
    """Maximal-entropy conjecture scan."""

    tol: float = Field(default=1e-9, gt=0.0, description="Distance to log2(n) counted as maximal")


class AnalysisConfig(BaseModel):
    """Complete analysis configuration."""

    title: str | None = Field(default=None, description="Run title")
    entropy: EntropyConfig = Field(default_factory=EntropyConfig)
    scan: ScanConfig = Field(default_factory=ScanConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    extremal: ExtremalConfig = Field(default_factory=ExtremalConfig)
    conjecture: ConjectureConfig = Field(default_factory=ConjectureConfig)


def load_config(path: str | Path) -> AnalysisConfig:
    """Load configuration from a YAML file."""
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    return AnalysisConfig(**data)
