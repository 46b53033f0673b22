"""Immutable simple graphs and the structural queries built on them.

Vertices are ``0..n-1``. Adjacency is held as one neighbour bitmask per
vertex; the canonical serialisation is the upper-triangle bit sequence in
row-major order, i.e. pairs ``(0,1), (0,2), ..., (0,n-1), (1,2), ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex arguments."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def pair_index(n: int, i: int, j: int) -> int:
    """Row-major position of the pair ``(i, j)``, ``i < j``, in the upper triangle."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def upper_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise GraphError(f"invalid adjacency row for vertex {v}")
            for u in range(self.n):
                if (row >> u) & 1 and not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Build from an integer whose bit ``k`` is the k-th row-major pair."""
        rows = [0] * n
        for k, (i, j) in enumerate(upper_pairs(n)):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_bits(cls, n: int, bits: str) -> Graph:
        pairs = upper_pairs(n)
        if len(bits) != len(pairs) or set(bits) - {"0", "1"}:
            raise GraphError(f"expected {len(pairs)} binary digits, got {bits!r}")
        mask = sum(1 << k for k, b in enumerate(bits) if b == "1")
        return cls.from_mask(n, mask)

    # -- views --------------------------------------------------------------

    @property
    def mask(self) -> int:
        out = 0
        for k, (i, j) in enumerate(upper_pairs(self.n)):
            if (self.adj[i] >> j) & 1:
                out |= 1 << k
        return out

    @property
    def bits(self) -> str:
        return "".join(
            "1" if (self.adj[i] >> j) & 1 else "0" for i, j in upper_pairs(self.n)
        )

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool((self.adj[i] >> j) & 1)

    def neighbors(self, i: int) -> list[int]:
        self._check_vertex(i)
        row = self.adj[i]
        return [u for u in range(self.n) if (row >> u) & 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in upper_pairs(self.n) if (self.adj[i] >> j) & 1]

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise GraphError(f"vertex {i} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Construct a simple graph; duplicate and reversed pairs collapse."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    rows = [0] * n
    for pair in edges:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge {(a, b)} has an endpoint outside 0..{n - 1}")
        if a == b:
            raise GraphError(f"edge {(a, b)} is a self-loop")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``v`` of ``G`` becomes vertex ``perm[v]`` of the result."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError(f"{list(perm)} is not a permutation of 0..{G.n - 1}")
    return build_graph(G.n, [(perm[a], perm[b]) for a, b in G.edges()])


def delete_vertex(G: Graph, i: int) -> Graph:
    """The card ``G - i``; vertices above ``i`` shift down by one."""
    if G.n < 2:
        raise GraphError("cannot delete a vertex from a one-vertex graph")
    G._check_vertex(i)
    low = (1 << i) - 1
    rows = []
    for v, row in enumerate(G.adj):
        if v == i:
            continue
        rows.append((row & low) | ((row >> (i + 1)) << i))
    return Graph(G.n - 1, tuple(rows))


def degree(G: Graph, i: int) -> int:
    G._check_vertex(i)
    return _popcount(G.adj[i])


def degree_sequence(G: Graph) -> list[int]:
    return sorted((_popcount(r) for r in G.adj), reverse=True)


def edge_count(G: Graph) -> int:
    return sum(_popcount(r) for r in G.adj) // 2


def _components_within(adj: Sequence[int], alive: int) -> int:
    count = 0
    left = alive
    while left:
        seed = left & -left
        reach = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & alive & ~reach
            reach |= new
            frontier |= new
        left &= ~reach
        count += 1
    return count


def component_count(G: Graph) -> int:
    return _components_within(G.adj, (1 << G.n) - 1)


def is_connected(G: Graph) -> bool:
    return component_count(G) == 1


def is_cutnode(G: Graph, i: int) -> bool:
    if G.n < 2:
        raise GraphError("cutnodes need n >= 2")
    G._check_vertex(i)
    return component_count(delete_vertex(G, i)) > component_count(G)


def blocks(G: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (biconnected components, bridges included).

    Isolated vertices belong to no block. Hopcroft-Tarjan with an edge stack,
    written iteratively.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    out: list[frozenset[int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(G.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, u):
                        break
                out.append(frozenset(comp))
    return out


def block_count_at(G: Graph, i: int) -> int:
    """Number of blocks containing a cutnode ``i``; 1 for every other vertex."""
    if not is_cutnode(G, i):
        return 1
    return sum(1 for b in blocks(G) if i in b)


def is_eulerian(G: Graph) -> bool:
    """Connected with every degree even."""
    return is_connected(G) and all(_popcount(r) % 2 == 0 for r in G.adj)
