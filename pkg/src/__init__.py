"""walk-entropy - walk entropies, walk regularity and corpus statistics of small graphs."""

__version__ = "0.1.0"
