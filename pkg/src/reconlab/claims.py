"""Claims about hypomorphic graphs as exact, checkable propositions.

Pair claims are evaluated for a fixed card-valid matching ``sigma`` (vertex
``i`` of G paired with ``sigma[i]`` of H). Single-graph claims need no
matching. Every failure carries a witness that :func:`replay_witness` can
recompute from the graphs alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

from .graph import (
    Graph,
    block_count_at,
    component_count,
    degree,
    degree_sequence,
    delete_vertex,
    edge_count,
    is_connected,
    is_cutnode,
    is_eulerian,
)
from .hypo import MATCHING_CAP, Matching, card_valid_matchings, is_card_valid
from .paths import check_path_sum_identity, count_paths_at, count_paths_pair


class ClaimId(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C7B = "C7b"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"

    def __str__(self) -> str:
        return self.value


DESCRIPTIONS = {
    ClaimId.C1: "equal edge counts",
    ClaimId.C2: "deg(v_i) = deg(u_sigma(i)) for every i",
    ClaimId.C3: "equal degree sequences",
    ClaimId.C4: "G Eulerian iff H Eulerian",
    ClaimId.C5: "sum over i != j of p(j,i,l) equals l * p(j,l)",
    ClaimId.C6: "connected pair: cutnodes and block counts correspond under sigma",
    ClaimId.C7: "equal component counts",
    ClaimId.C7B: "c(G - i) = c(G) + bl(i) - 1 for every i",
    ClaimId.C8: "p_G(j,l) = p_H(sigma(j),l)",
    ClaimId.C9: "p_G(i,j,l) = p_H(sigma(i),sigma(j),l)",
    ClaimId.C10: "sigma preserves adjacency",
}

PAIR_CLAIMS = (
    ClaimId.C1, ClaimId.C2, ClaimId.C3, ClaimId.C4, ClaimId.C6,
    ClaimId.C7, ClaimId.C8, ClaimId.C9, ClaimId.C10,
)
SINGLE_CLAIMS = (ClaimId.C5, ClaimId.C7B)

# evaluation modes
DEFAULT = "default"
CONNECTED = "connected"
ALL_GRAPHS = "all-graphs"
EXTENDED = "extended"


class InvalidMatchingError(ValueError):
    """Raised when the supplied matching is not card-valid for the pair."""


@dataclass(frozen=True)
class Witness:
    quantity: str
    vertices: tuple[int, ...]
    mapped: tuple[int, ...] = ()
    length: int | None = None
    left: object = None
    right: object = None


@dataclass(frozen=True)
class ClaimReport:
    claim: ClaimId
    passed: bool
    matching: Matching | None = None
    witness: Witness | None = None
    mode: str = DEFAULT
    vacuous: bool = False

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


# -- pair claims -------------------------------------------------------------
#
# Each checker returns None on success or the first violating Witness. Loops
# run in a fixed order (length, then vertices ascending) so the witness is
# deterministic.


def _c1(G: Graph, H: Graph, s: Sequence[int]) -> Witness | None:
    a, b = edge_count(G), edge_count(H)
    return None if a == b else Witness("edge_count", (), (), None, a, b)


def _c2(G, H, s):
    for i in range(G.n):
        a, b = degree(G, i), degree(H, s[i])
        if a != b:
            return Witness("degree", (i,), (s[i],), None, a, b)
    return None


def _c3(G, H, s):
    a, b = degree_sequence(G), degree_sequence(H)
    return None if a == b else Witness("degree_sequence", (), (), None, a, b)


def _c4(G, H, s):
    a, b = is_eulerian(G), is_eulerian(H)
    return None if a == b else Witness("is_eulerian", (), (), None, a, b)


def _c6(G, H, s):
    for i in range(G.n):
        a, b = is_cutnode(G, i), is_cutnode(H, s[i])
        if a != b:
            return Witness("is_cutnode", (i,), (s[i],), None, a, b)
    for i in range(G.n):
        a, b = block_count_at(G, i), block_count_at(H, s[i])
        if a != b:
            return Witness("block_count_at", (i,), (s[i],), None, a, b)
    return None


def _c7(G, H, s):
    a, b = component_count(G), component_count(H)
    return None if a == b else Witness("component_count", (), (), None, a, b)


def _c8(G, H, s, lengths):
    for l in lengths:
        for j in range(G.n):
            a, b = count_paths_at(G, j, l), count_paths_at(H, s[j], l)
            if a != b:
                return Witness("count_paths_at", (j,), (s[j],), l, a, b)
    return None


def _c9(G, H, s, lengths):
    for l in lengths:
        for i in range(G.n):
            for j in range(i + 1, G.n):
                a = count_paths_pair(G, i, j, l)
                b = count_paths_pair(H, s[i], s[j], l)
                if a != b:
                    return Witness("count_paths_pair", (i, j), (s[i], s[j]), l, a, b)
    return None


def _c10(G, H, s):
    for i in range(G.n):
        for j in range(i + 1, G.n):
            a, b = G.has_edge(i, j), H.has_edge(s[i], s[j])
            if a != b:
                return Witness("adjacent", (i, j), (s[i], s[j]), None, a, b)
    return None


def _paper_lengths(n: int) -> range:
    return range(1, n - 1)


_PAIR_CHECKERS: dict[ClaimId, Callable] = {
    ClaimId.C1: _c1,
    ClaimId.C2: _c2,
    ClaimId.C3: _c3,
    ClaimId.C4: _c4,
    ClaimId.C6: _c6,
    ClaimId.C7: _c7,
    ClaimId.C8: lambda G, H, s: _c8(G, H, s, _paper_lengths(G.n)),
    ClaimId.C9: lambda G, H, s: _c9(G, H, s, _paper_lengths(G.n)),
    ClaimId.C10: _c10,
}


def _as_matching(sigma) -> Matching:
    return sigma if isinstance(sigma, Matching) else Matching(tuple(sigma))


def verify_claims(
    G: Graph,
    H: Graph,
    sigma: Matching | Sequence[int],
    *,
    extended: bool = False,
    all_graphs: bool = False,
    fast: bool = False,
    checked: bool = False,
) -> list[ClaimReport]:
    """Evaluate C1-C4, C6-C10 for one card-valid matching.

    ``extended`` adds C8/C9 at ``l = n - 1``; ``all_graphs`` adds C6 without the
    connectivity hypothesis. Both are appended after the main reports with
    their own mode tag. ``fast`` stops at the first failure. ``checked`` skips
    the card-validity check when the caller already enumerated ``sigma``.
    """
    m = _as_matching(sigma)
    if G.n != H.n or len(m) != G.n:
        raise InvalidMatchingError("graphs and matching differ in size")
    if G.n < 3:
        raise InvalidMatchingError("claims are stated for n >= 3")
    if not checked and not is_card_valid(G, H, m.sigma):
        raise InvalidMatchingError(f"matching {m.sigma} is not card-valid")
    s = m.sigma
    both_connected = is_connected(G) and is_connected(H)
    reports: list[ClaimReport] = []
    for cid in PAIR_CLAIMS:
        if cid is ClaimId.C6 and not both_connected:
            reports.append(ClaimReport(cid, True, m, None, CONNECTED, vacuous=True))
            continue
        w = _PAIR_CHECKERS[cid](G, H, s)
        mode = CONNECTED if cid is ClaimId.C6 else DEFAULT
        reports.append(ClaimReport(cid, w is None, m, w, mode))
        if fast and w is not None:
            return reports
    if all_graphs:
        w = _c6(G, H, s)
        reports.append(ClaimReport(ClaimId.C6, w is None, m, w, ALL_GRAPHS))
    if extended:
        last = (G.n - 1,)
        for cid, fn in ((ClaimId.C8, _c8), (ClaimId.C9, _c9)):
            w = fn(G, H, s, last)
            reports.append(ClaimReport(cid, w is None, m, w, EXTENDED))
    return reports


# -- single-graph claims -----------------------------------------------------


def _c5(G: Graph) -> Witness | None:
    for l in _paper_lengths(G.n):
        for j in range(G.n):
            if check_path_sum_identity(G, j, l) != 0:
                total = sum(count_paths_pair(G, j, i, l) for i in range(G.n) if i != j)
                return Witness("path_sum", (j,), (), l, total, l * count_paths_at(G, j, l))
    return None


def _c7b(G: Graph) -> Witness | None:
    c = component_count(G)
    for i in range(G.n):
        a = component_count(delete_vertex(G, i))
        b = c + block_count_at(G, i) - 1
        if a != b:
            return Witness("component_formula", (i,), (), None, a, b)
    return None


def verify_single_graph_claims(G: Graph) -> list[ClaimReport]:
    """C5, then C7b in connected-only mode, then C7b over all graphs."""
    if G.n < 3:
        raise ValueError("claims are stated for n >= 3")
    w5 = _c5(G)
    w7 = _c7b(G)
    if is_connected(G):
        connected = ClaimReport(ClaimId.C7B, w7 is None, None, w7, CONNECTED)
    else:
        connected = ClaimReport(ClaimId.C7B, True, None, None, CONNECTED, vacuous=True)
    return [
        ClaimReport(ClaimId.C5, w5 is None, None, w5),
        connected,
        ClaimReport(ClaimId.C7B, w7 is None, None, w7, ALL_GRAPHS),
    ]


def replay_witness(report: ClaimReport, G: Graph, H: Graph | None = None) -> tuple[object, object]:
    """Recompute ``(left, right)`` for a failing report directly from the graphs."""
    w = report.witness
    if w is None:
        raise ValueError("report carries no witness")
    q = w.quantity
    if q == "path_sum":
        (j,) = w.vertices
        total = sum(count_paths_pair(G, j, i, w.length) for i in range(G.n) if i != j)
        return total, w.length * count_paths_at(G, j, w.length)
    if q == "component_formula":
        (i,) = w.vertices
        return (
            component_count(delete_vertex(G, i)),
            component_count(G) + block_count_at(G, i) - 1,
        )
    if H is None:
        raise ValueError("pair witnesses need both graphs")
    whole = {
        "edge_count": edge_count,
        "degree_sequence": degree_sequence,
        "is_eulerian": is_eulerian,
        "component_count": component_count,
    }
    if q in whole:
        return whole[q](G), whole[q](H)
    per_vertex = {
        "degree": degree,
        "is_cutnode": is_cutnode,
        "block_count_at": block_count_at,
    }
    if q in per_vertex:
        return per_vertex[q](G, *w.vertices), per_vertex[q](H, *w.mapped)
    if q == "count_paths_at":
        return count_paths_at(G, *w.vertices, w.length), count_paths_at(H, *w.mapped, w.length)
    if q == "count_paths_pair":
        return (
            count_paths_pair(G, *w.vertices, w.length),
            count_paths_pair(H, *w.mapped, w.length),
        )
    if q == "adjacent":
        return G.has_edge(*w.vertices), H.has_edge(*w.mapped)
    raise ValueError(f"unknown witness quantity {q!r}")


# -- aggregation over matchings ----------------------------------------------


@dataclass
class ClaimTally:
    holds_for_all: bool = True
    holds_for_some: bool = False
    passing: int = 0
    examined: int = 0
    first_failure: ClaimReport | None = None


@dataclass
class QuantifiedReport:
    matchings: list[Matching]
    truncated: bool
    tallies: dict[tuple[ClaimId, str], ClaimTally] = field(default_factory=dict)
    single_graph: dict[str, list[ClaimReport]] = field(default_factory=dict)

    @property
    def examined(self) -> int:
        return len(self.matchings)

    def tally(self, claim: ClaimId | str, mode: str | None = None) -> ClaimTally:
        cid = ClaimId(claim)
        if mode is None:
            mode = CONNECTED if cid is ClaimId.C6 else DEFAULT
        return self.tallies[(cid, mode)]


def aggregate_over_matchings(
    G: Graph,
    H: Graph,
    cap: int = MATCHING_CAP,
    *,
    extended: bool = False,
    all_graphs: bool = False,
) -> QuantifiedReport:
    """Run every pair claim under every card-valid matching (up to ``cap``).

    Raises NotHypomorphicError for graphs with different decks.
    """
    found = card_valid_matchings(G, H, cap)
    report = QuantifiedReport(list(found.matchings), found.truncated)
    for m in found:
        for r in verify_claims(G, H, m, extended=extended, all_graphs=all_graphs, checked=True):
            t = report.tallies.setdefault((r.claim, r.mode), ClaimTally())
            t.examined += 1
            if r.passed:
                t.passing += 1
                t.holds_for_some = True
            else:
                t.holds_for_all = False
                if t.first_failure is None:
                    t.first_failure = r
    if G.n >= 3:
        report.single_graph = {
            "G": verify_single_graph_claims(G),
            "H": verify_single_graph_claims(H),
        }
    return report
