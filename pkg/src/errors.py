"""Exceptions raised by walk-entropy."""


class WalkEntropyError(ValueError):
    """Base class for all library errors."""


class GraphError(WalkEntropyError):
    """A structural precondition on the input graph does not hold."""


class Graph6Error(WalkEntropyError):
    """A graph6 line could not be decoded or a graph could not be encoded."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SpectralError(WalkEntropyError):
    """Numerical failure in a spectral computation."""


class BetaRangeError(SpectralError):
    """Inverse temperature outside the accepted range."""


class WalkCountOverflowError(SpectralError):
    """Exact walk counts would not fit in a 64-bit integer."""
