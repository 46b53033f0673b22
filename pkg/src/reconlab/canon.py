"""Canonical forms, isomorphism and decks.

The canonical form of a graph is the lexicographically smallest row-major
upper-triangle bit string over all vertex orderings. The search places
vertices one at a time and keeps the unplaced ones in an ordered partition;
placing vertex ``v`` fixes its row completely (non-neighbours of ``v`` first
inside every cell, then neighbours), so only the choice of the next vertex
from the first cell is ever branched on. The first vertex is therefore always
of minimum degree, and cells play the role of degree-refinement classes.
Branches whose row is larger than a sibling's are cut, and so are branches
for vertices that are twins of an already explored sibling.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, delete_vertex

CANON_CAP = 10


class CapacityError(ValueError):
    """Raised when an input exceeds a configured size cap."""


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: str

    def graph(self) -> Graph:
        return Graph.from_bits(self.n, self.bits)


@dataclass(frozen=True)
class Deck:
    """Multiset of cards as sorted ``(form, multiplicity)`` runs."""

    cards: tuple[tuple[CanonicalForm, int], ...]

    @classmethod
    def from_forms(cls, forms) -> Deck:
        return cls(tuple(sorted(Counter(forms).items())))

    def __len__(self) -> int:
        return sum(c for _, c in self.cards)

    def expanded(self) -> list[CanonicalForm]:
        return [f for f, c in self.cards for _ in range(c)]

    def fingerprint(self) -> str:
        text = ";".join(f"{f.n}:{f.bits}x{c}" for f, c in self.cards)
        return hashlib.blake2b(text.encode(), digest_size=8).hexdigest()


def _search(G: Graph) -> tuple[str, tuple[int, ...]]:
    n = G.n
    adj = G.adj
    best: list = [None, None]

    def rec(prefix: str, order: tuple[int, ...], cells: list[list[int]]) -> None:
        if not cells:
            if best[0] is None or prefix < best[0]:
                best[0], best[1] = prefix, order
            return
        if best[0] is not None and prefix > best[0][: len(prefix)]:
            return
        first = cells[0]
        remaining = 0
        for cell in cells:
            for v in cell:
                remaining |= 1 << v
        children = []
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        min_row = None
        for v in first:
            open_nb = adj[v] & remaining
            closed_nb = open_nb | (1 << v)
            if open_nb in seen_open or closed_nb in seen_closed:
                continue
            seen_open.add(open_nb)
            seen_closed.add(closed_nb)
            row_parts = []
            new_cells = []
            for cell in cells:
                non = [u for u in cell if u != v and not (adj[v] >> u) & 1]
                nb = [u for u in cell if (adj[v] >> u) & 1]
                row_parts.append("0" * len(non) + "1" * len(nb))
                if non:
                    new_cells.append(non)
                if nb:
                    new_cells.append(nb)
            row = "".join(row_parts)
            if min_row is None or row < min_row:
                min_row = row
                children = [(v, new_cells)]
            elif row == min_row:
                children.append((v, new_cells))
        for v, new_cells in children:
            rec(prefix + min_row, order + (v,), new_cells)

    rec("", (), [list(range(n))])
    return best[0], best[1]


@lru_cache(maxsize=1 << 18)
def _canonical(G: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    bits, order = _search(G)
    return CanonicalForm(G.n, bits), order


def canonical_form(G: Graph, cap: int = CANON_CAP) -> CanonicalForm:
    if G.n > cap:
        raise CapacityError(f"canonical form limited to n <= {cap}, got n={G.n}")
    return _canonical(G)[0]


def canonical_labeling(G: Graph, cap: int = CANON_CAP) -> tuple[int, ...]:
    """Permutation ``perm`` with ``relabel(G, perm)`` equal to the canonical graph."""
    if G.n > cap:
        raise CapacityError(f"canonical form limited to n <= {cap}, got n={G.n}")
    order = _canonical(G)[1]
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return tuple(perm)


def are_isomorphic(G: Graph, H: Graph, cap: int = CANON_CAP) -> bool:
    if G.n != H.n:
        return False
    return canonical_form(G, cap) == canonical_form(H, cap)


def cards(G: Graph, cap: int = CANON_CAP) -> list[CanonicalForm]:
    """Canonical forms of ``G - i`` in vertex order."""
    if G.n < 2:
        raise GraphError("decks need n >= 2")
    return [canonical_form(delete_vertex(G, i), cap) for i in range(G.n)]


def deck(G: Graph, cap: int = CANON_CAP) -> Deck:
    return Deck.from_forms(cards(G, cap))
