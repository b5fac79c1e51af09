"""Per-order census of enumerated braces: Dedekind, level and nilpotency counts.

    python3 scripts/census.py --max-order 8 [--strategy lambda] [--csv out.csv]
"""

import argparse
import csv
import sys
import time
from collections import Counter

from bracelab.enumeration import STRATEGIES, enumerate_braces
from bracelab.series import nilpotency_report
from bracelab.substructure import is_dedekind

COLUMNS = ["order", "braces", "abelian", "dedekind", "square_zero", "centrally_nilpotent", "levels", "seconds"]


def census_row(n: int, strategy: str) -> dict:
    t0 = time.perf_counter()
    braces = enumerate_braces(n, strategy, cap=max(n, 1))
    levels: Counter = Counter()
    row = dict.fromkeys(COLUMNS[2:6], 0)
    for A in braces:
        rep = nilpotency_report(A)
        row["abelian"] += A.is_abelian()
        row["dedekind"] += bool(is_dedekind(A))
        row["square_zero"] += all(A.star(a, a) == 0 for a in A.elements)
        row["centrally_nilpotent"] += rep.centrally_nilpotent
        levels[rep.multipermutation_level] += 1
    row.update(
        order=n,
        braces=len(braces),
        levels=" ".join(f"{k}:{v}" for k, v in sorted(levels.items(), key=lambda kv: (kv[0] is None, kv[0] or 0))),
        seconds=f"{time.perf_counter() - t0:.2f}",
    )
    return row


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--strategy", choices=STRATEGIES, default="lambda")
    p.add_argument("--csv", help="also write the table here")
    args = p.parse_args(argv)

    rows = [census_row(n, args.strategy) for n in range(1, args.max_order + 1)]
    w = csv.DictWriter(sys.stdout, COLUMNS, delimiter="\t", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            out = csv.DictWriter(fh, COLUMNS)
            out.writeheader()
            out.writerows(rows)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
