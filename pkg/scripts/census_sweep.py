#!/usr/bin/env python3
"""Monoid census sweep: elements, idempotents, involutives, Green classes.

Writes one CSV row per rank.  Ranks 9 and 10 (idempotents only) are
enabled with --extended and can take several minutes; use --threads to
shard the count across processes.

    python scripts/census_sweep.py --max 8 --out census.csv
"""

import argparse
import csv
import math
import sys
import time

from okada import monoid as mo


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8)
    ap.add_argument("--green-max", type=int, default=6)
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rows = []
    for n in range(args.max + 1):
        t0 = time.time()
        total, idem, invol = mo.census_counts(n, args.threads)
        row = {
            "n": n,
            "elements": total,
            "idempotents": idem,
            "involutives": invol,
            "seconds": f"{time.time() - t0:.2f}",
        }
        if n <= args.green_max:
            gc = mo.green_classes(n)
            row.update(
                r_classes=len(gc.r_classes),
                l_classes=len(gc.l_classes),
                j_classes=len(gc.j_classes),
                max_aperiodicity=mo.aperiodicity_max(n),
            )
        rows.append(row)
        print(f"rank {n}: {row}", file=sys.stderr)
    if args.extended:
        for n in (9, 10):
            t0 = time.time()
            idem = mo.idempotent_count(n, args.threads)
            rows.append(
                {
                    "n": n,
                    "elements": math.factorial(n),
                    "idempotents": idem,
                    "seconds": f"{time.time() - t0:.2f}",
                }
            )
            print(f"rank {n}: idempotents={idem}", file=sys.stderr)

    fields = [
        "n", "elements", "idempotents", "involutives",
        "r_classes", "l_classes", "j_classes", "max_aperiodicity", "seconds",
    ]
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.DictWriter(out, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
