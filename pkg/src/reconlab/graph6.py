"""graph6 codec (n <= 62) and edge-list text input."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"
MAX_N = 62


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _column_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        base = len(HEADER)
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 record", base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", base + k)
    n = ord(line[0]) - 63
    if n > MAX_N:
        raise Graph6Error("extended graph6 lengths are not supported", base)
    if n < 1:
        raise Graph6Error("graph6 record with zero vertices", base)
    nbits = n * (n - 1) // 2
    body = line[1:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} payload bytes for n={n}, got {len(body)}", base + 1)
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + len(line) - 1)
    edges = [p for p, b in zip(_column_pairs(n), bits) if b]
    return build_graph(n, edges)


def emit_graph6(G: Graph) -> str:
    if G.n > MAX_N:
        raise GraphError(f"graph6 output limited to n <= {MAX_N}, got {G.n}")
    bits = [1 if G.has_edge(i, j) else 0 for i, j in _column_pairs(G.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line, skipping ``>>graph6<<``-only lines."""
    for raw in lines:
        line = raw.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Lines ``u v`` (0-based). A line holding one integer fixes the vertex count.

    Without it, ``n`` is one more than the largest index seen. ``#`` starts a comment.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(n, edges)
