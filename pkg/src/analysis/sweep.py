"""Walk entropy as a function of the inverse temperature, and the shape of that curve."""

from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np
import pandas as pd

from src.entropy import edge_walk_entropy, walk_entropy
from src.graphs import Graph

CONSTANT_TOL = 1e-9
STEP_MARGIN = 1e-12


class SweepShape(str, Enum):
    CONSTANT = "Constant"
    MONOTONE_DECREASING = "MonotoneDecreasing"
    INTERIOR_MINIMUM = "InteriorMinimum"
    OTHER = "Other"


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Entropy on a beta grid.

    ``resolution`` is the constant step of a linear grid or the constant
    ratio between neighbours of a log grid; ``argmin_beta`` is only set for
    an interior minimum.
    """

    beta_grid: np.ndarray
    s_values: np.ndarray
    shape: SweepShape
    argmin_beta: float | None
    resolution: float
    log_spacing: bool

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"beta": self.beta_grid, "entropy": self.s_values})


def beta_grid(
    beta_min: float, beta_max: float, points: int, log_spacing: bool = True
) -> np.ndarray:
    if not 0 < beta_min < beta_max:
        raise ValueError(f"Need 0 < beta_min < beta_max, got {beta_min} and {beta_max}")
    if points < 3:
        raise ValueError(f"A sweep needs at least 3 points, got {points}")
    if log_spacing:
        return np.geomspace(beta_min, beta_max, points)
    return np.linspace(beta_min, beta_max, points)


def classify_shape(values: np.ndarray) -> tuple[SweepShape, int | None]:
    """Shape of a sampled curve, and the argmin index when it is interior."""
    values = np.asarray(values, dtype=np.float64)
    if values.max() - values.min() <= CONSTANT_TOL:
        return SweepShape.CONSTANT, None
    steps = np.diff(values)
    if np.all(steps <= STEP_MARGIN) and values[0] - values[-1] > CONSTANT_TOL:
        return SweepShape.MONOTONE_DECREASING, None
    low = int(np.argmin(values))
    if 0 < low < len(values) - 1 and values[low] < min(values[0], values[-1]) - STEP_MARGIN:
        return SweepShape.INTERIOR_MINIMUM, low
    return SweepShape.OTHER, None


def sweep(
    g: Graph,
    beta_min: float = 1e-3,
    beta_max: float = 1e2,
    points: int = 200,
    log_spacing: bool = True,
    entropy: Literal["node", "edge"] = "node",
) -> SweepResult:
    grid = beta_grid(beta_min, beta_max, points, log_spacing)
    functional = walk_entropy if entropy == "node" else edge_walk_entropy
    values = np.array([functional(g, float(beta)) for beta in grid])
    shape, low = classify_shape(values)
    resolution = float(grid[1] / grid[0]) if log_spacing else float(grid[1] - grid[0])
    return SweepResult(
        beta_grid=grid,
        s_values=values,
        shape=shape,
        argmin_beta=float(grid[low]) if low is not None else None,
        resolution=resolution,
        log_spacing=log_spacing,
    )
