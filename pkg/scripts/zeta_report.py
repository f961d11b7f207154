"""SU(2): sum of mu^p over the alcove against (k+2) 4^(-p/2) C(p, p/2) / sin^p(pi/(k+2))."""
import argparse

import mpmath

from fusioncat.moddim import zeta_report

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--p", type=int, nargs="+", default=[2, 4, 6])
parser.add_argument("--kmax", type=int, default=20)
parser.add_argument("--prec", type=int, default=128)
args = parser.parse_args()

print(f"{'p':>2} {'k':>3} {'direct':>28} {'rel. error':>10}  agrees")
for row in zeta_report(tuple(args.p), args.kmax, args.prec):
    print(f"{row.p:2d} {row.k:3d} {mpmath.nstr(row.direct, 25):>28} {mpmath.nstr(row.rel_error, 3):>10}  {row.agrees}")
