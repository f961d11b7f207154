"""Ratio |A_k(G)| / asymptote for growing k, with and without the (ell/k)^dim factor."""
import argparse

import mpmath
from mpmath import mp

from fusioncat.lie import lie_data
from fusioncat.moddim import classical_limit

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("types", nargs="*", default=["A1", "A2", "B2", "G2"])
parser.add_argument("--prec", type=int, default=128)
args = parser.parse_args()

print(f"{'type':>4} {'k':>7} {'ratio - 1':>12} {'corrected - 1':>14}")
for name in args.types:
    d = lie_data(name)
    for k in (10**2, 10**3, 10**4, 10**5):
        _, ratio = classical_limit(name, k, args.prec)
        with mp.workprec(args.prec):
            corrected = ratio / (mpmath.mpf(k + d.dual_coxeter) / k) ** d.dim_group
        print(f"{name:>4} {k:7d} {mpmath.nstr(ratio - 1, 4):>12} {mpmath.nstr(corrected - 1, 4):>14}")
