"""graph6 codec, short form only (n <= 62).

Layout: byte 0 is 63 + n, followed by the upper-triangle adjacency bits in
column order (0,1), (0,2), (1,2), (0,3), ... packed big-endian six bits per
byte, each byte offset by 63, zero-padded to a six-bit boundary.
"""

import logging
from typing import Iterable, Iterator

import numpy as np

from src.errors import Graph6Error
from src.graphs.graph import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_NODES = 62
_OFFSET = 63
_MAX_CHAR = 126
_SHIFTS = np.arange(5, -1, -1)


def _pair_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    # tril_indices yields (j, i), i < j, row by row: column order on the upper triangle
    j_idx, i_idx = np.tril_indices(n, k=-1)
    return i_idx, j_idx


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.strip()
    if not line:
        raise Graph6Error("Empty graph6 string", 0)

    codes = np.array([ord(c) for c in line], dtype=np.int64)
    bad = np.nonzero((codes < _OFFSET) | (codes > _MAX_CHAR))[0]
    if bad.size:
        raise Graph6Error(f"Character {line[bad[0]]!r} outside the graph6 range", int(bad[0]))

    n = int(codes[0]) - _OFFSET
    if n > MAX_NODES:
        raise Graph6Error("Long-form graph6 (n > 62) is not supported", 0)
    if n < 1:
        raise Graph6Error("Graph6 encodes an empty graph", 0)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(codes) != 1 + nbytes:
        offset = min(len(codes), 1 + nbytes)
        raise Graph6Error(
            f"Expected {nbytes} data bytes for n={n}, found {len(codes) - 1}", offset
        )

    values = codes[1:] - _OFFSET
    bits = ((values[:, None] >> _SHIFTS) & 1).ravel()
    if bits[nbits:].any():
        raise Graph6Error("Non-zero padding bits", len(codes) - 1)

    adj = np.zeros((n, n), dtype=bool)
    i_idx, j_idx = _pair_order(n)
    upper = bits[:nbits].astype(bool)
    adj[i_idx, j_idx] = upper
    adj[j_idx, i_idx] = upper
    return Graph(n, adj)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (without trailing newline)."""
    if not 1 <= g.n <= MAX_NODES:
        raise Graph6Error(f"Node count {g.n} outside the supported range 1..{MAX_NODES}", 0)

    i_idx, j_idx = _pair_order(g.n)
    bits = g.adj[i_idx, j_idx].astype(int)
    bits = np.concatenate([bits, np.zeros(-len(bits) % 6, dtype=int)])
    values = bits.reshape(-1, 6) @ (1 << _SHIFTS)
    chars = [chr(_OFFSET + g.n)] + [chr(_OFFSET + int(v)) for v in values]
    return "".join(chars)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_number, graph6_text) for every non-empty line.

    A leading ``>>graph6<<`` header is stripped; whatever follows it on the
    same line is still yielded.
    """
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):].strip()
        if not line:
            continue
        yield number, line


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse every graph in a graph6 stream, failing on the first bad line."""
    for number, text in iter_graph6_lines(lines):
        try:
            yield parse_graph6(text)
        except Graph6Error as e:
            logger.debug("graph6 parse failure on line %d: %s", number, e)
            raise Graph6Error(f"Line {number}: {e}", e.offset) from e
