"""Exhaustive hypomorphic-pair search for n = 2..N with timings.

    python scripts/search_all.py --max-n 7 --workers 4
"""

import argparse
import time

from reconlab.graph6 import emit_graph6
from reconlab.hypo import find_hypomorphic_pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        r = find_hypomorphic_pairs(n, workers=args.workers)
        dt = time.perf_counter() - t0
        print(f"n={n}  classes={r.classes:5d}  deck buckets={r.buckets:5d}  "
              f"pairs={len(r.pairs)}  {dt:7.2f}s")
        for a, b in r.pairs:
            print(f"    {emit_graph6(a.graph())}  {emit_graph6(b.graph())}")


if __name__ == "__main__":
    main()
