"""Total colorings of unitary Cayley graphs X_n within phi(n) + 2 colors.

Three branches: prime n gives the complete graph; even n is bipartite and
combines a Delta-edge-coloring with two vertex colors; odd composite n is
covered by its p1-blocks of consecutive cliques plus a fan edge coloring
of the remainder.
"""

from totalcoloring import build_unitary_cayley, euler_phi, unitary_total, verify

for n in [13, 12, 15, 21, 45]:
    res = unitary_total(n)
    G = build_unitary_cayley(n)
    report = verify(G, res.coloring)
    print(f"X_{n}: method={res.method}, colors={report.colors_used} "
          f"<= phi+2 = {euler_phi(n) + 2}, valid={report.is_valid}")
