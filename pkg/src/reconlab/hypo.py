"""Hypomorphism, card-valid matchings and exhaustive small-graph search."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .canon import CanonicalForm, CapacityError, Deck, canonical_form, cards, deck
from .graph import Graph, delete_vertex, upper_pairs, pair_index

ENUM_CAP = 7
MATCHING_CAP = 10_000
THREADS_ENV = "RECON_LAB_THREADS"


class NotHypomorphicError(ValueError):
    """Raised when a card-valid matching is requested for graphs with different decks."""


@dataclass(frozen=True)
class Matching:
    """Vertex ``i`` of G corresponds to vertex ``sigma[i]`` of H."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError(f"{self.sigma} is not a permutation")

    def __getitem__(self, i: int) -> int:
        return self.sigma[i]

    def __len__(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class MatchingSet:
    matchings: tuple[Matching, ...]
    truncated: bool

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.matchings)

    def __len__(self) -> int:
        return len(self.matchings)


@dataclass
class PairSearchResult:
    n: int
    classes: int
    buckets: int
    collisions: int
    pairs: list[tuple[CanonicalForm, CanonicalForm]] = field(default_factory=list)


def are_hypomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n:
        return False
    return deck(G) == deck(H)


def is_card_valid(G: Graph, H: Graph, sigma: Sequence[int]) -> bool:
    """Re-check ``G - i ~= H - sigma(i)`` for every ``i`` from scratch."""
    if G.n != H.n or sorted(sigma) != list(range(G.n)):
        return False
    return all(
        canonical_form(delete_vertex(G, i)) == canonical_form(delete_vertex(H, sigma[i]))
        for i in range(G.n)
    )


def card_valid_matchings(G: Graph, H: Graph, cap: int = MATCHING_CAP) -> MatchingSet:
    """Perfect matchings of the card-compatibility relation, in lexicographic order."""
    if not are_hypomorphic(G, H):
        raise NotHypomorphicError("no card-valid matching exists: decks differ")
    n = G.n
    g_cards = cards(G)
    h_cards = cards(H)
    options = [[j for j in range(n) if h_cards[j] == g_cards[i]] for i in range(n)]
    found: list[Matching] = []
    used = [False] * n
    sigma = [0] * n
    truncated = False

    def extend(i: int) -> bool:
        nonlocal truncated
        if i == n:
            if len(found) == cap:
                truncated = True
                return False
            found.append(Matching(tuple(sigma)))
            return True
        for j in options[i]:
            if used[j]:
                continue
            used[j] = True
            sigma[i] = j
            keep_going = extend(i + 1)
            used[j] = False
            if not keep_going:
                return False
        return True

    extend(0)
    return MatchingSet(tuple(found), truncated)


@lru_cache(maxsize=None)
def _pair_permutation_table(n: int) -> np.ndarray:
    """``table[p, k]``: row-major pair index that pair ``k`` moves to under permutation ``p``."""
    pairs = upper_pairs(n)
    rows = []
    for perm in permutations(range(n)):
        row = []
        for i, j in pairs:
            a, b = sorted((perm[i], perm[j]))
            row.append(pair_index(n, a, b))
        rows.append(row)
    return np.asarray(rows, dtype=np.int64).reshape(-1, len(pairs))


def enumerate_graphs(n: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices.

    Masks are scanned in increasing order; the first unseen mask starts a new
    class and its whole orbit under vertex permutations is marked seen, so each
    representative is the smallest mask of its class.
    """
    if n > cap:
        raise CapacityError(
            f"exhaustive enumeration limited to n <= {cap}; "
            "ingest an external graph6 list for larger n"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n * (n - 1) // 2
    if m == 0:
        yield Graph.from_mask(n, 0)
        return
    table = _pair_permutation_table(n)
    weights = np.left_shift(np.int64(1), table)
    seen = np.zeros(1 << m, dtype=bool)
    shifts = np.arange(m, dtype=np.int64)
    mask = 0
    total = 1 << m
    while mask < total:
        bitvec = (mask >> shifts) & 1
        orbit = (weights * bitvec).sum(axis=1)
        seen[orbit] = True
        yield Graph.from_mask(n, mask)
        free = np.flatnonzero(~seen[mask:])
        if free.size == 0:
            break
        mask += int(free[0])


def worker_count(default: int = 1) -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def _deck_of(G: Graph) -> tuple[CanonicalForm, Deck]:
    return canonical_form(G), deck(G)


def find_hypomorphic_pairs(
    n: int,
    graphs: Iterable[Graph] | None = None,
    workers: int | None = None,
) -> PairSearchResult:
    """Bucket isomorphism classes by deck and report non-isomorphic deck collisions.

    ``graphs`` may be any stream of n-vertex graphs (duplicates up to
    isomorphism are dropped); by default all classes are enumerated.
    """
    if n < 2:
        raise ValueError("decks need n >= 2")
    if graphs is None:
        graphs = enumerate_graphs(n)
    workers = worker_count() if workers is None else max(1, workers)
    stream = [G for G in graphs if G.n == n]
    if workers > 1 and len(stream) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_deck_of, stream, chunksize=64))
    else:
        results = [_deck_of(G) for G in stream]

    classes: dict[CanonicalForm, Deck] = {}
    for form, d in results:
        classes.setdefault(form, d)

    buckets: dict[str, list[CanonicalForm]] = defaultdict(list)
    for form in sorted(classes):
        buckets[classes[form].fingerprint()].append(form)

    pairs = []
    collisions = 0
    for members in buckets.values():
        if len(members) < 2:
            continue
        collisions += 1
        for a_idx, a in enumerate(members):
            for b in members[a_idx + 1:]:
                # hash equality is only a hint
                if classes[a] == classes[b]:
                    pairs.append((a, b))
    pairs.sort()
    return PairSearchResult(n, len(classes), len(buckets), collisions, pairs)
