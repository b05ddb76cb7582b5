"""Configuration module."""

from .models import (
    AnalysisConfig,
    ConjectureConfig,
    EntropyConfig,
    ExtremalConfig,
    ScanConfig,
    SweepConfig,
    load_config,
)

__all__ = [
    "AnalysisConfig",
    "ConjectureConfig",
    "EntropyConfig",
    "ExtremalConfig",
    "ScanConfig",
    "SweepConfig",
    "load_config",
]
