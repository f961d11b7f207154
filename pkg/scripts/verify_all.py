"""Run every check suite and print one line per check plus a summary."""
import argparse
import sys

import mpmath

from fusioncat.checks import run_suite

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-rank", type=int, default=8)
parser.add_argument("--prec", type=int, default=128)
args = parser.parse_args()

results = run_suite("all", args.max_rank, args.prec)
for c in results:
    res = "" if c.residual is None else f"  residual {mpmath.nstr(c.residual, 3)}"
    print(f"{c.status:6s} {c.name}{res}")
counts = {s: sum(c.status == s for c in results) for s in ("pass", "fail", "report")}
print(counts)
sys.exit(1 if counts["fail"] else 0)
