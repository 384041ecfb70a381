"""Exact total chromatic number and chromatic index by backtracking.

The search colors the conflict graph (total graph or line graph) with
DSATUR-ordered backtracking: the next element is the one with the most
distinctly-colored neighbors, ties broken by conflict degree then index,
and a fresh color may only be the lowest unused index (symmetry breaking).
A counting bound on color-class sizes (an independent set of the total
graph is an independent vertex set plus a disjoint matching) rules many
palette sizes out before any search.  Budgets are node counts; exhausting
one yields bounds instead of a value.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, build_power_of_cycle
from .coloring import norm_edge

DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class OracleOutcome:
    lower: int
    upper: int
    nodes: int
    budget_hit: bool

    @property
    def value(self) -> Optional[int]:
        """Exact value when the search completed, else None."""
        return self.lower if self.lower == self.upper else None


class _Budget(Exception):
    pass


def _greedy_bound(adj: list[list[int]]) -> int:
    """DSATUR greedy upper bound on the chromatic number of a conflict graph."""
    n = len(adj)
    color = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        u = max((v for v in range(n) if color[v] == 0),
                key=lambda v: (len(sat[v]), len(adj[v]), -v))
        c = 1
        while c in sat[u]:
            c += 1
        color[u] = c
        for w in adj[u]:
            sat[w].add(c)
    return max(color, default=0)


def _search_once(adj: list[list[int]], t: int, budget: int, nodes_start: int,
                 offset: int):
    """One DSATUR backtracking run with a rotated tie-break.

    Returns (colorable, nodes, assignment-or-None).  Raises _Budget when
    the node budget runs out.
    """
    n = len(adj)
    color = [0] * n
    counts = [[0] * (t + 2) for _ in range(n)]  # counts[v][c]: colored neighbors
    sat = [0] * n                               # distinct neighbor colors
    deg = [len(a) for a in adj]
    nodes = nodes_start

    def down(max_used: int) -> bool:
        nonlocal nodes
        best, best_key = -1, (-1, -1, -n - 1)
        for v in range(n):
            if color[v] == 0:
                key = (sat[v], deg[v], -((v + offset) % n))
                if key > best_key:
                    best, best_key = v, key
        if best < 0:
            return True
        nodes += 1
        if nodes > budget:
            raise _Budget(nodes)
        v = best
        cv = counts[v]
        for c in range(1, min(t, max_used + 1) + 1):
            if cv[c]:
                continue
            color[v] = c
            for w in adj[v]:
                cw = counts[w]
                if cw[c] == 0:
                    sat[w] += 1
                cw[c] += 1
            if down(max_used if c <= max_used else c):
                return True
            color[v] = 0
            for w in adj[v]:
                cw = counts[w]
                cw[c] -= 1
                if cw[c] == 0:
                    sat[w] -= 1
        return False

    ok = down(0)
    return ok, nodes, (color if ok else None)


_RESTARTS = 16


def _search(adj: list[list[int]], t: int, budget: int, nodes_start: int,
            witness: bool = False):
    """DSATUR backtracking with deterministic restarts.

    Budget slices run with rotated vertex tie-breaks; a run that finishes
    without exhausting its slice is definitive either way, so restarts
    only trigger on slice exhaustion.  Raises _Budget when all slices run
    out of nodes.
    """
    n = len(adj)
    if n == 0:
        return True, nodes_start, []
    slice_size = max(budget // _RESTARTS, 1)
    step = max(n // _RESTARTS, 1)
    nodes = nodes_start
    for attempt in range(_RESTARTS):
        cap = budget if attempt == _RESTARTS - 1 else min(
            nodes + slice_size, budget)
        try:
            ok, nodes, assignment = _search_once(
                adj, t, cap, nodes, offset=attempt * step)
        except _Budget as exc:
            nodes = exc.args[0]
            if nodes >= budget:
                raise
            continue
        return ok, nodes, (assignment if witness else None)
    raise _Budget(nodes)


def _max_independent_set(G: Graph, cap_n: int = 32) -> Optional[int]:
    """Exact independence number, or None when the graph is too large."""
    if G.n > cap_n:
        return None
    adj = [frozenset(G.neighbors(v)) for v in range(G.n)]

    def mis(live: frozenset) -> int:
        if not live:
            return 0
        v = max(live, key=lambda x: len(adj[x] & live))
        if not (adj[v] & live):
            return 1 + mis(live - {v})
        # branch: exclude v, or include v
        best = mis(live - {v})
        cand = 1 + mis(live - {v} - adj[v])
        return max(best, cand)

    return mis(frozenset(range(G.n)))


def _exact_chromatic(adj: list[list[int]], lower: int, budget: int,
                     class_cap: Optional[int] = None) -> OracleOutcome:
    n_elem = len(adj)
    upper = max(_greedy_bound(adj), lower)
    nodes = 0
    t = lower
    while t < upper:
        if class_cap is not None and t * class_cap < n_elem:
            t += 1
            continue
        try:
            ok, nodes, _ = _search(adj, t, budget, nodes)
        except _Budget as exc:
            return OracleOutcome(t, upper, exc.args[0], True)
        if ok:
            return OracleOutcome(t, t, nodes, False)
        t += 1
    return OracleOutcome(upper, upper, nodes, False)


def total_conflict_graph(G: Graph) -> list[list[int]]:
    """Adjacency of the total graph: elements are vertices then edges."""
    edges = G.sorted_edges()
    index = {e: G.n + i for i, e in enumerate(edges)}
    adj: list[set[int]] = [set() for _ in range(G.n + len(edges))]

    def link(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)

    for (u, v) in edges:
        ei = index[(u, v)]
        link(u, v)      # (a)
        link(u, ei)     # (c)
        link(v, ei)
    for v in range(G.n):
        inc = [index[norm_edge(v, w)] for w in G.neighbors(v)]
        for a in range(len(inc)):        # (b)
            for b in range(a + 1, len(inc)):
                link(inc[a], inc[b])
    return [sorted(s) for s in adj]


def line_conflict_graph(G: Graph) -> list[list[int]]:
    edges = G.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    adj: list[set[int]] = [set() for _ in edges]
    for v in range(G.n):
        inc = [index[norm_edge(v, w)] for w in G.neighbors(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                adj[inc[a]].add(inc[b])
                adj[inc[b]].add(inc[a])
    return [sorted(s) for s in adj]


def _total_class_cap(G: Graph) -> Optional[int]:
    """Largest possible color class of the total graph.

    A class is an independent vertex set I plus a matching M avoiding I,
    so |I| + 2|M| <= n and the class size is at most (n + alpha(G)) // 2.
    """
    alpha = _max_independent_set(G)
    if alpha is None:
        return None
    return (G.n + alpha) // 2


def total_chromatic_exact(G: Graph, budget: int = DEFAULT_BUDGET) -> OracleOutcome:
    """Exact total chromatic number (chromatic number of the total graph)."""
    if G.n == 0:
        return OracleOutcome(0, 0, 0, False)
    adj = total_conflict_graph(G)
    lower = G.max_degree() + 1
    return _exact_chromatic(adj, lower, budget, class_cap=_total_class_cap(G))


def chromatic_index_exact(G: Graph, budget: int = DEFAULT_BUDGET) -> OracleOutcome:
    """Exact chromatic index (chromatic number of the line graph)."""
    if G.m == 0:
        return OracleOutcome(0, 0, 0, False)
    adj = line_conflict_graph(G)
    return _exact_chromatic(adj, G.max_degree(), budget, class_cap=G.n // 2)


def find_total_coloring(G: Graph, t: int, budget: int = DEFAULT_BUDGET):
    """A valid t-total-coloring of G, or None if impossible / budget hit."""
    from .coloring import TotalColoring

    cap = _total_class_cap(G)
    adj = total_conflict_graph(G)
    if cap is not None and t * cap < len(adj):
        return None
    try:
        ok, _, assignment = _search(adj, t, budget, 0, witness=True)
    except _Budget:
        return None
    if not ok:
        return None
    vc = {v: assignment[v] for v in range(G.n)}
    ec = {e: assignment[G.n + i] for i, e in enumerate(G.sorted_edges())}
    return TotalColoring(vc, ec, t)


# ---------------------------------------------------------------------------
# conjecture sweep over powers of cycles

@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    delta: int
    chi_total_lo: int
    chi_total_hi: int
    predicted: int
    agrees: Optional[bool]
    nodes: int


def _predicted(n: int, k: int, delta: int) -> int:
    if k > n / 3 - 1 and n % 2 == 1:
        return delta + 2
    return delta + 1


def _sweep_one(args: tuple[int, int, int]) -> SweepRow:
    n, k, budget = args
    G = build_power_of_cycle(n, k)
    delta = G.max_degree()
    out = total_chromatic_exact(G, budget)
    pred = _predicted(n, k, delta)
    agrees = (out.value == pred) if out.value is not None else None
    return SweepRow(n, k, delta, out.lower, out.upper, pred, agrees, out.nodes)


def conjecture_sweep(n_max: int = 13, budget: int = DEFAULT_BUDGET,
                     jobs: int = 1) -> list[SweepRow]:
    """Compare oracle values with the power-of-cycle prediction.

    Covers every C_n^k with 2 <= k < floor(n/2) and n <= n_max.
    """
    tasks = [(n, k, budget)
             for n in range(5, n_max + 1)
             for k in range(2, n // 2)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_one, tasks))
    else:
        rows = [_sweep_one(t) for t in tasks]
    rows.sort(key=lambda r: (r.n, r.k))
    return rows


SWEEP_FIELDS = ["n", "k", "delta", "chi_total_lo", "chi_total_hi",
                "predicted", "agrees", "nodes"]


def sweep_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(SWEEP_FIELDS)
    for r in rows:
        writer.writerow([r.n, r.k, r.delta, r.chi_total_lo, r.chi_total_hi,
                         r.predicted, "" if r.agrees is None else r.agrees, r.nodes])
    return buf.getvalue()


def sweep_to_json(rows: Sequence[SweepRow]) -> str:
    return json.dumps([{f: getattr(r, f) for f in SWEEP_FIELDS} for r in rows])
