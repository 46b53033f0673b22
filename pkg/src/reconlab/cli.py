"""``reconlab`` command line.

Exit codes: 0 success (claim verdicts are output, not errors), 1 usage or
input error, 2 claim failure under ``--strict``, 3 a negative answer from
``iso`` / ``hypo`` or an oracle disagreement.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Sequence

from . import report as rpt
from .canon import CapacityError, canonical_form, deck
from .claims import (
    InvalidMatchingError,
    aggregate_over_matchings,
    verify_claims,
    verify_single_graph_claims,
)
from .graph import Graph, GraphError
from .graph6 import Graph6Error, emit_graph6, parse_edge_list, parse_graph6, read_graph6_lines
from .hypo import (
    MATCHING_CAP,
    NotHypomorphicError,
    are_hypomorphic,
    card_valid_matchings,
    find_hypomorphic_pairs,
)
from .paths import (
    count_paths_at,
    count_paths_at_oracle,
    count_paths_pair,
    count_paths_pair_oracle,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_STRICT = 2
EXIT_NO = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_graph(arg: str) -> tuple[Graph, str]:
    """A graph6 string, or a file holding one graph6 line or an edge list."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        first = lines[0] if lines else ""
        try:
            G = parse_graph6(first)
        except Graph6Error:
            G = parse_edge_list(text)
        return G, emit_graph6(G)
    G = parse_graph6(arg)
    return G, emit_graph6(G)


def _parse_perm(text: str, n: int) -> tuple[int, ...]:
    try:
        perm = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"matching must be comma-separated integers, got {text!r}") from None
    if sorted(perm) != list(range(n)):
        raise UsageError(f"matching {text!r} is not a permutation of 0..{n - 1}")
    return perm


def _emit(doc: dict, args) -> None:
    if getattr(args, "deterministic", False):
        doc["timing"] = {"seconds": 0.0}
    text = rpt.dumps(doc)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _summarise(reports, label: str) -> None:
    for r in reports:
        extra = ""
        if r.vacuous:
            extra = " (vacuous)"
        elif r.witness is not None:
            w = r.witness
            extra = f" {w.quantity} at {list(w.vertices)}"
            if w.mapped:
                extra += f"->{list(w.mapped)}"
            if w.length is not None:
                extra += f" l={w.length}"
            extra += f": {w.left} != {w.right}"
        print(f"{label}{r.claim.value:<4} [{r.mode}] {r.verdict}{extra}")


def cmd_deck(args) -> int:
    G, _ = load_graph(args.graph)
    for form, count in sorted(
        ((emit_graph6(f.graph()), c) for f, c in deck(G).cards)
    ):
        print(f"{form} x{count}")
    return EXIT_OK


def cmd_iso(args) -> int:
    G, _ = load_graph(args.g)
    H, _ = load_graph(args.h)
    same = G.n == H.n and canonical_form(G) == canonical_form(H)
    print("isomorphic" if same else "not isomorphic")
    return EXIT_OK if same else EXIT_NO


def cmd_hypo(args) -> int:
    G, _ = load_graph(args.g)
    H, _ = load_graph(args.h)
    ok = are_hypomorphic(G, H)
    print("hypomorphic" if ok else "not hypomorphic")
    if ok and args.matchings:
        found = card_valid_matchings(G, H, args.cap)
        for m in found:
            print(",".join(map(str, m.sigma)))
        if found.truncated:
            print(f"truncated at {args.cap} matchings")
    return EXIT_OK if ok else EXIT_NO


def cmd_paths(args) -> int:
    G, _ = load_graph(args.graph)
    if args.pair is None:
        value = count_paths_at(G, args.vertex, args.length)
    else:
        value = count_paths_pair(G, args.vertex, args.pair, args.length)
    print(value)
    if args.oracle:
        if args.pair is None:
            check = count_paths_at_oracle(G, args.vertex, args.length)
        else:
            check = count_paths_pair_oracle(G, args.vertex, args.pair, args.length)
        print(f"oracle {check} {'agrees' if check == value else 'DISAGREES'}")
        if check != value:
            return EXIT_NO
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    G, g6 = load_graph(args.g)
    H, h6 = load_graph(args.h)
    flags = dict(extended=args.extended, all_graphs=args.all_graphs)
    pair_reports = None
    quantified = None
    if args.all_matchings:
        quantified = aggregate_over_matchings(G, H, args.cap, **flags)
    else:
        if args.matching:
            sigma = _parse_perm(args.matching, G.n)
        else:
            found = card_valid_matchings(G, H, 1)
            sigma = found.matchings[0].sigma
        pair_reports = [verify_claims(G, H, sigma, fast=args.fast, **flags)]
    single = {"G": verify_single_graph_claims(G), "H": verify_single_graph_claims(H)}
    doc = rpt.build_document(
        {"G": g6, "H": h6}, pair_reports, quantified, single,
        seconds=time.perf_counter() - start,
    )
    if args.json:
        if pair_reports:
            _summarise(pair_reports[0], "")
        if quantified is not None:
            for c in doc["quantified"]["claims"]:
                print(
                    f"{c['claim']:<4} [{c['mode']}] all={c['holds_for_all']} "
                    f"some={c['holds_for_some']} ({c['passing']}/{c['examined']})"
                )
        for key, reps in single.items():
            _summarise(reps, f"{key} ")
    _emit(doc, args)
    if args.strict and rpt.any_failure(doc):
        return EXIT_STRICT
    return EXIT_OK


def cmd_identity(args) -> int:
    start = time.perf_counter()
    G, g6 = load_graph(args.graph)
    reports = verify_single_graph_claims(G)
    _summarise(reports, "")
    if args.json:
        doc = rpt.build_document(
            {"G": g6}, single_graph={"G": reports}, seconds=time.perf_counter() - start
        )
        _emit(doc, args)
    if args.strict and not all(r.passed for r in reports):
        return EXIT_STRICT
    return EXIT_OK


def cmd_search(args) -> int:
    if args.input:
        with open(args.input) as fh:
            graphs = [G for G in read_graph6_lines(fh) if G.n == args.n]
        result = find_hypomorphic_pairs(args.n, graphs, workers=args.workers)
    else:
        result = find_hypomorphic_pairs(args.n, workers=args.workers)
    print(f"n={result.n} classes={result.classes} deck_buckets={result.buckets} "
          f"pairs={len(result.pairs)}")
    for a, b in result.pairs:
        print(f"{emit_graph6(a.graph())} {emit_graph6(b.graph())}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="reconlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("deck", help="print the deck as graph6 cards with multiplicities")
    s.add_argument("graph")
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("iso", help="exit 0 iff the graphs are isomorphic")
    s.add_argument("g")
    s.add_argument("h")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("hypo", help="exit 0 iff the graphs are hypomorphic")
    s.add_argument("g")
    s.add_argument("h")
    s.add_argument("--matchings", action="store_true")
    s.add_argument("--cap", type=int, default=MATCHING_CAP)
    s.set_defaults(func=cmd_hypo)

    s = sub.add_parser("paths", help="exact simple-path counts")
    s.add_argument("graph")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--pair", type=int)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("verify", help="run the pair claims and emit a report")
    s.add_argument("g")
    s.add_argument("h")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--matching", help="comma-separated sigma, e.g. 3,1,2,0")
    group.add_argument("--all-matchings", action="store_true")
    s.add_argument("--cap", type=int, default=MATCHING_CAP)
    s.add_argument("--json")
    s.add_argument("--strict", action="store_true")
    s.add_argument("--extended", action="store_true", help="also check l = n-1")
    s.add_argument("--all-graphs", action="store_true", help="C6 without connectivity")
    s.add_argument("--fast", action="store_true", help="stop at the first failure")
    s.add_argument("--deterministic", action="store_true", help="zero timing fields")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("identity", help="run the single-graph claims")
    s.add_argument("graph")
    s.add_argument("--json")
    s.add_argument("--strict", action="store_true")
    s.add_argument("--deterministic", action="store_true")
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("search", help="exhaustive hypomorphic-pair search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--input", help="graph6 file, one graph per line")
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"reconlab: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (Graph6Error, GraphError, CapacityError, InvalidMatchingError,
            NotHypomorphicError, OSError, ValueError) as exc:
        print(f"reconlab: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
