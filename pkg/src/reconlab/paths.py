"""Exact counts of simple paths through a vertex or a vertex pair.

A path of length ``l`` has ``l`` edges and ``l + 1`` distinct vertices and is
unoriented. ``count_paths_at(G, j, l)`` counts paths whose vertex set contains
``j`` anywhere, not only at an end.

Two independent routes are provided: a depth-first enumerator (the one every
other module uses) and a subset dynamic program that counts Hamiltonian paths
of every induced subgraph.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .canon import CapacityError
from .graph import Graph, GraphError

ORACLE_CAP = 12


def _check_length(G: Graph, l: int, upper: int | None = None) -> None:
    upper = G.n - 1 if upper is None else upper
    if not 1 <= l <= upper:
        raise GraphError(f"path length {l} outside 1..{upper} for n={G.n}")


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")


@lru_cache(maxsize=1 << 16)
def path_vertex_sets(G: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex bitmasks of every unoriented simple path, indexed by length.

    Entry ``l`` lists one mask per path with ``l`` edges (masks repeat when
    distinct paths share a vertex set). Each path is recorded once, from its
    smaller endpoint.
    """
    n = G.n
    adj = G.adj
    found: list[list[int]] = [[] for _ in range(n)]
    for s in range(n):
        stack = [(s, 1 << s, 0)]
        while stack:
            end, seen, length = stack.pop()
            if length and end > s:
                found[length].append(seen)
            nxt = adj[end] & ~seen
            while nxt:
                w = (nxt & -nxt).bit_length() - 1
                nxt &= nxt - 1
                stack.append((w, seen | (1 << w), length + 1))
    return tuple(tuple(sorted(f)) for f in found)


@lru_cache(maxsize=1 << 16)
def path_count_tables(G: Graph) -> tuple[np.ndarray, np.ndarray]:
    """``(at, pair)`` with ``at[l, j]`` and ``pair[l, i, j]`` for ``0 <= l < n``.

    Counts are Python ints in object arrays so nothing can overflow.
    """
    n = G.n
    at = np.zeros((n, n), dtype=object)
    pair = np.zeros((n, n, n), dtype=object)
    shifts = np.arange(n)
    for l, masks in enumerate(path_vertex_sets(G)):
        if not masks:
            continue
        member = ((np.asarray(masks, dtype=np.int64)[:, None] >> shifts) & 1).astype(np.int64)
        at[l] = [int(x) for x in member.sum(axis=0)]
        gram = member.T @ member
        pair[l] = [[int(x) for x in row] for row in gram]
    return at, pair


def count_paths_at(G: Graph, j: int, l: int) -> int:
    _check_vertex(G, j)
    _check_length(G, l)
    return path_count_tables(G)[0][l, j]


def count_paths_pair(G: Graph, j: int, i: int, l: int) -> int:
    _check_vertex(G, j)
    _check_vertex(G, i)
    if i == j:
        raise GraphError("pair path counts need two distinct vertices")
    _check_length(G, l)
    return path_count_tables(G)[1][l, j, i]


@lru_cache(maxsize=1 << 14)
def _hamiltonian_counts(G: Graph, max_size: int) -> dict[int, int]:
    """Unoriented Hamiltonian path counts of ``G[S]`` for all ``2 <= |S| <= max_size``.

    ``ends[S][v]`` is the number of oriented paths with vertex set ``S`` ending
    at ``v``; it is built one popcount layer at a time.
    """
    adj = G.adj
    layer: dict[int, dict[int, int]] = {1 << v: {v: 1} for v in range(G.n)}
    ham: dict[int, int] = {}
    for _ in range(2, max_size + 1):
        nxt: dict[int, dict[int, int]] = {}
        for S, ends in layer.items():
            for v, c in ends.items():
                ext = adj[v] & ~S
                while ext:
                    w = (ext & -ext).bit_length() - 1
                    ext &= ext - 1
                    T = S | (1 << w)
                    row = nxt.setdefault(T, {})
                    row[w] = row.get(w, 0) + c
        for T, ends in nxt.items():
            ham[T] = sum(ends.values()) // 2
        layer = nxt
    return ham


def _dp_limit(G: Graph, size: int, cap: int) -> int:
    # one table per small graph serves every length
    return G.n if G.n <= cap else size


def count_paths_at_oracle(G: Graph, j: int, l: int, cap: int = ORACLE_CAP) -> int:
    _check_vertex(G, j)
    _check_length(G, l)
    if l + 1 > cap:
        raise CapacityError(f"oracle limited to paths on <= {cap} vertices, got {l + 1}")
    size = l + 1
    return sum(
        c for S, c in _hamiltonian_counts(G, _dp_limit(G, size, cap)).items()
        if (S >> j) & 1 and S.bit_count() == size
    )


def count_paths_pair_oracle(G: Graph, j: int, i: int, l: int, cap: int = ORACLE_CAP) -> int:
    _check_vertex(G, j)
    _check_vertex(G, i)
    if i == j:
        raise GraphError("pair path counts need two distinct vertices")
    _check_length(G, l)
    if l + 1 > cap:
        raise CapacityError(f"oracle limited to paths on <= {cap} vertices, got {l + 1}")
    size = l + 1
    both = (1 << i) | (1 << j)
    return sum(
        c for S, c in _hamiltonian_counts(G, _dp_limit(G, size, cap)).items()
        if S & both == both and S.bit_count() == size
    )


def check_path_sum_identity(G: Graph, j: int, l: int) -> int:
    """Residual of summing pair counts over partners against ``l`` times the vertex count."""
    _check_vertex(G, j)
    _check_length(G, l, upper=G.n - 2)
    total = sum(count_paths_pair(G, j, i, l) for i in range(G.n) if i != j)
    return total - l * count_paths_at(G, j, l)
