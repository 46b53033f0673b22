"""For every class on n vertices, aggregate the pair claims over all card-valid
matchings of (G, G) and tabulate how often each claim holds for all / some.

    python scripts/matching_sweep.py --max-n 6 [--csv out.csv]
"""

import argparse
import csv
import sys
from collections import Counter

from reconlab.claims import PAIR_CLAIMS, aggregate_over_matchings
from reconlab.graph6 import emit_graph6
from reconlab.hypo import enumerate_graphs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--cap", type=int, default=10_000)
    ap.add_argument("--csv")
    args = ap.parse_args()

    rows = []
    for n in range(args.min_n, args.max_n + 1):
        forall, exists, total = Counter(), Counter(), 0
        for G in enumerate_graphs(n):
            q = aggregate_over_matchings(G, G, args.cap)
            total += 1
            row = {"n": n, "graph6": emit_graph6(G), "matchings": q.examined,
                   "truncated": q.truncated}
            for cid in PAIR_CLAIMS:
                t = q.tally(cid)
                forall[cid.value] += t.holds_for_all
                exists[cid.value] += t.holds_for_some
                row[cid.value] = f"{t.passing}/{t.examined}"
            rows.append(row)
        cells = "  ".join(f"{c.value}:{forall[c.value]}/{exists[c.value]}" for c in PAIR_CLAIMS)
        print(f"n={n} classes={total}  forall/exists  {cells}")

    if args.csv:
        out = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="")
        writer = csv.DictWriter(out, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


if __name__ == "__main__":
    main()
