"""Walk regularity, the line-graph edge criterion and graph classes."""

from .classes import GraphClass, classify
from .profile import (
    DiagPowerProfile,
    diag_power_profile,
    exact_powers,
    is_edge_walk_regular,
    is_walk_regular,
)
from .tensor import LineTensorRegularityReport, line_walk_regular_tensor_check

__all__ = [
    "DiagPowerProfile",
    "GraphClass",
    "LineTensorRegularityReport",
    "classify",
    "diag_power_profile",
    "exact_powers",
    "is_edge_walk_regular",
    "is_walk_regular",
    "line_walk_regular_tensor_check",
]
