"""Exact total chromatic numbers and the power-of-cycle prediction.

The oracle colors the total graph by DSATUR backtracking with a counting
prune: a color class of the total graph is an independent vertex set plus
a disjoint matching, so palettes with t * ((n + alpha)/2) < n + m are
impossible without any search.  That bound alone proves C_7^2 is type II.
"""

from totalcoloring import build_power_of_cycle, total_chromatic_exact
from totalcoloring.oracle import conjecture_sweep, sweep_to_csv

out = total_chromatic_exact(build_power_of_cycle(7, 2))
print(f"chi''(C_7^2) = {out.value} = Delta + 2  "
      f"({out.nodes} search nodes)\n")

for n in [6, 8, 9, 10, 11, 12]:
    out = total_chromatic_exact(build_power_of_cycle(n, 2))
    print(f"chi''(C_{n}^2) = {out.value}")

print("\nprediction sweep up to n = 11 "
      "(Delta+2 exactly when k > n/3 - 1 and n odd):")
print(sweep_to_csv(conjecture_sweep(11)))
