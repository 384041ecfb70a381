"""Mock threshold graphs (built by a vertex script) and odd graphs.

A mock threshold graph grows one vertex at a time with prefix degree
0, 1, i-1 or i.  The inductive construction follows the script and stays
within Delta + 2 colors; recognition recovers a script by peeling.  Odd
graphs O_m (Kneser K(2m-1, m-1)) are colored with m + 2 colors through
an independent-set / matching split; O_3 is the Petersen graph.
"""

import random

from totalcoloring import (MockThresholdScript, MockThresholdStep,
                           build_mock_threshold, build_odd_graph,
                           mock_threshold_total, odd_graph_total,
                           recognize_mock_threshold, total_chromatic_exact,
                           verify)

rng = random.Random(0)
steps = [MockThresholdStep("isolated", None)]
for i in range(1, 10):
    kind = rng.choice(["isolated", "pendant", "codominant", "dominant"])
    ref = rng.randrange(i) if kind in ("pendant", "codominant") else None
    steps.append(MockThresholdStep(kind, ref))
script = MockThresholdScript(tuple(steps), tuple(range(10)))

G = build_mock_threshold(script)
res = mock_threshold_total(G, script)
print(f"mock threshold on {G.n} vertices: {res.colors_used} colors "
      f"(Delta + 2 = {G.max_degree() + 2})")
print("recognized build kinds:",
      [s.kind for s in recognize_mock_threshold(G).steps])

for m in [2, 3, 4, 5]:
    res = odd_graph_total(m)
    G = build_odd_graph(m)
    print(f"O_{m}: n={G.n}, colors={res.colors_used} <= {m + 2}, "
          f"valid={verify(G, res.coloring).is_valid}")

petersen = build_odd_graph(3)
print("oracle on Petersen: chi'' =", total_chromatic_exact(petersen).value,
      "(construction used 5)")
