"""k |A_k(SU(N))| against N |A_N(SU(k))| over a grid of N, k."""
import argparse

import mpmath

from fusioncat.moddim import level_rank_check

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max", type=int, default=6)
parser.add_argument("--prec", type=int, default=128)
args = parser.parse_args()

for N in range(2, args.max + 1):
    for k in range(2, args.max + 1):
        lhs, _, err = level_rank_check(N, k, args.prec)
        print(f"N={N} k={k}  {mpmath.nstr(lhs, 20):>24}  rel. error {mpmath.nstr(err, 3)}")
