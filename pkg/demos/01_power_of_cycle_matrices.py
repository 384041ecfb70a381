"""Walk through the power-of-cycle color-matrix constructions.

The color matrix of C_n^k stores vertex colors on the diagonal and edge
colors in the banded off-diagonal cells.  For n = 2(2k+1) the base
construction tiles an anti-circulant latin square and uses the optimal
2k+1 colors; block composition, shrinking and growing extend that to
further even and odd orders.
"""

from totalcoloring import (build_power_of_cycle, matrix_to_coloring, poc_base,
                           poc_block, poc_grow, poc_shrink, verify)

# the 5-color matrix of C_10^2 (n = 2(2k+1) with k = 2)
M = poc_base(10)
print("C_10^2 color matrix:")
print(M.to_csv())

G = build_power_of_cycle(10, 2)
report = verify(G, matrix_to_coloring(G, M))
print(f"valid: {report.is_valid}, colors used: {report.colors_used} "
      f"(Delta + 1 = {G.max_degree() + 1})\n")

# block composition handles n = s*q with q odd, n/q even, k+1 <= q <= 2k+1
for (n, k) in [(20, 4), (18, 5), (40, 4)]:
    M = poc_block(n, k)
    G = build_power_of_cycle(n, k)
    report = verify(G, matrix_to_coloring(G, M))
    print(f"C_{n}^{k}: valid={report.is_valid}, colors={report.colors_used}, "
          f"target {2 * k + 1}")

# odd orders: delete or add one vertex, paying one extra color
M14 = poc_block(14, 3)
for name, M, n in [("shrink -> C_13^3", poc_shrink(M14), 13),
                   ("grow   -> C_15^3", poc_grow(M14), 15)]:
    G = build_power_of_cycle(n, 3)
    report = verify(G, matrix_to_coloring(G, M))
    print(f"{name}: valid={report.is_valid}, colors={report.colors_used}, "
          f"budget {2 * 3 + 2}")
