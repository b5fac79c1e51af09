"""Replay the explicit computations on the non-abelian brace structure of Z.

Prints each claim with the value computed here and exits non-zero on a mismatch.
"""

import argparse
import sys

from bracelab.catalog import negation_brace
from bracelab.series import socle_series
from bracelab.substructure import is_ideal
from bracelab.zbrace import ZBrace, z_is_dedekind, z_mul, z_socle_membership, z_star, z_subgroup_ideal_check


def checks(limit: int):
    yield "1 . 1 = 0", z_mul(1, 1) == 0
    yield "3 * 1 = -2", z_star(3, 1) == -2
    yield f"Soc = 2Z on [-{limit},{limit}]", all(
        bool(z_socle_membership(n)) == (n % 2 == 0) for n in range(-limit, limit + 1))
    yield f"kZ ideal iff k even or k <= 1, k < {limit}", all(
        z_subgroup_ideal_check(k).is_ideal == (k % 2 == 0 or k <= 1) for k in range(limit))
    yield "not Dedekind, witness 3Z", z_is_dedekind().witness_k == 3
    yield "multipermutation level 2", ZBrace().multipermutation_level == 2
    # the quotients Z/2NZ carry the same structure
    ok = True
    for N in range(1, 9):
        B = negation_brace(2 * N)
        for k in range(1, 2 * N + 1):
            if (2 * N) % k == 0:
                sub = [x for x in B.elements if x % k == 0]
                ok &= is_ideal(B, sub).is_ideal == z_subgroup_ideal_check(k).is_ideal
        ok &= len(socle_series(B).terms) == 3 or 2 * N == 2
    yield "finite quotients Z/2NZ agree, N <= 8", ok


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--limit", type=int, default=1000)
    args = p.parse_args(argv)
    failed = 0
    for claim, ok in checks(args.limit):
        print(f"{'ok  ' if ok else 'FAIL'} {claim}")
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
