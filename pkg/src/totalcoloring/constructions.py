"""Coloring constructions for each graph family.

Every construction routes its output through the verifier; a result is
only returned when the three total-coloring conditions hold within the
stated color budget, otherwise a ConstructionError is raised.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import (Graph, MockThresholdScript, build_cayley_from_table,
                     build_mock_threshold, build_odd_graph,
                     build_power_of_cycle, build_unitary_cayley,
                     check_group_table, euler_phi, group_inverse,
                     kneser_vertex_labels, smallest_prime_factor, is_prime)
from .latin import anti_circulant_square
from .coloring import (ColorMatrix, TotalColoring, bipartite_edge_color,
                       complete_total, edge_color_plus_one,
                       hamiltonian_split, matrix_to_coloring, missing_colors,
                       norm_edge, one_factorize, verify)


class ConstructionError(Exception):
    """A construction's preconditions failed or its search budget ran out."""


class BudgetError(ConstructionError):
    """A construction's internal exact search ran out of nodes."""


@dataclass(frozen=True)
class ConstructionResult:
    coloring: TotalColoring
    colors_used: int
    budget: int
    method: str
    notes: tuple[str, ...] = ()

    def envelope(self) -> str:
        return json.dumps({"method": self.method, "budget": self.budget,
                           "colors_used": self.colors_used,
                           "notes": list(self.notes)})


def _checked(G: Graph, coloring: TotalColoring, budget: int, method: str,
             notes: Sequence[str] = ()) -> ConstructionResult:
    report = verify(G, coloring)
    if not report.is_valid:
        raise ConstructionError(
            f"{method}: produced an invalid coloring "
            f"({len(report.violations)} violations, first: {report.violations[0]})")
    used = report.colors_used
    if used > budget:
        raise ConstructionError(f"{method}: {used} colors exceed budget {budget}")
    return ConstructionResult(coloring, used, budget, method, tuple(notes))


# ---------------------------------------------------------------------------
# powers of cycles, even order (block color matrices)

def _block_matrix(s: int, m: int, i: int) -> ColorMatrix:
    """Color matrix for C_n^k, n = s(2m+1), k = 2m+1-i, with 2k+1 colors.

    Within a block of size q = 2m+1 the entries come straight from the
    anti-circulant latin square; cross-block entries carry fresh colors on
    constant diagonals (direction alternating with block-row parity), with
    the upper corner of the latin square grafted in when i > 1.
    """
    q = 2 * m + 1
    k = q - i
    n = s * q
    L = anti_circulant_square(q).cells  # 0-based, symbols 1..q
    fresh = 2 * (k - m)  # number of fresh-color diagonals, may be 0

    cells = [[0] * n for _ in range(n)]
    for gi in range(n):
        cells[gi][gi] = L[gi % q][gi % q]
    for gi in range(n):
        for d in range(1, k + 1):
            gj = (gi + d) % n
            p, p2 = gi // q, gj // q
            r, c = gi % q, gj % q
            if p == p2:
                val = L[r][c]
            else:
                e = r - c - i
                if e < fresh:
                    val = (2 * m + 2 + e) if p % 2 == 0 else (2 * k + 1 - e)
                else:
                    val = L[r][c]
            cells[gi][gj] = val
            cells[gj][gi] = val
    return ColorMatrix.from_rows(cells)


def _block_params(n: int, k: int) -> Optional[tuple[int, int, int]]:
    """Admissible (s, m, i) for the block construction, smallest q first."""
    start = k + 1 if (k + 1) % 2 == 1 else k + 2
    for q in range(start, 2 * k + 2, 2):
        if n % q == 0 and (n // q) % 2 == 0:
            m = (q - 1) // 2
            i = q - k
            if 1 <= i <= m + 1 and k >= 1:
                return (n // q, m, i)
    return None


def poc_block(n: int, k: int) -> ColorMatrix:
    """(2k+1)-color matrix of C_n^k for n = s(2m+1), s even, k = 2m+1-i."""
    params = _block_params(n, k)
    if params is None:
        raise ConstructionError(
            f"no admissible block form: need odd q | {n} with even quotient "
            f"and {k + 1} <= q <= {2 * k + 1}")
    s, m, i = params
    return _block_matrix(s, m, i)


def poc_base(n: int) -> ColorMatrix:
    """(2k+1)-color matrix of C_n^k for n = 2(2k+1), k = (n-2)/4."""
    if n % 4 != 2 or n < 6:
        raise ConstructionError(f"base case needs n = 2(2k+1) with k >= 1, got {n}")
    k = (n - 2) // 4
    return _block_matrix(2, k, k + 1)


def poc_augment(n: int, k: int) -> TotalColoring:
    """(2k+1)-total coloring of C_n^k by adding Hamiltonian 2-factors.

    Starts from the base matrix for k0 = (n-2)/4 and gives each extra
    distance x (k0 < x <= k, gcd(n, x) = 1) two fresh matching colors.
    """
    if n % 4 != 2 or n < 6:
        raise ConstructionError(f"augment needs n = 2 (mod 4), got {n}")
    k0 = (n - 2) // 4
    if not (k0 <= k < n / 2):
        raise ConstructionError(f"need (n-2)/4 <= k < n/2, got k={k}")
    for x in range(k0 + 1, k + 1):
        if math.gcd(n, x) != 1:
            raise ConstructionError(
                f"added distance {x} shares a factor with n={n}")
    base_graph = build_power_of_cycle(n, k0)
    coloring = matrix_to_coloring(base_graph, poc_base(n))
    vc = dict(coloring.vertex_colors)
    ec = dict(coloring.edge_colors)
    palette = 2 * k0 + 1
    for x in range(k0 + 1, k + 1):
        m1, m2 = hamiltonian_split(n, x)
        for e in m1:
            ec[e] = palette + 1
        for e in m2:
            ec[e] = palette + 2
        palette += 2
    return TotalColoring(vc, ec, palette)


def _infer_poc(M: ColorMatrix) -> tuple[Graph, int]:
    """Recover (graph, k) from a color matrix whose support is some C_n^k."""
    n = M.n
    dists = set()
    for gi in range(n):
        for gj in range(n):
            if gi != gj and M.cells[gi][gj] != 0:
                d = (gj - gi) % n
                dists.add(min(d, n - d))
    if not dists or dists != set(range(1, max(dists) + 1)):
        raise ConstructionError(f"support is not a power of cycle (distances {sorted(dists)})")
    k = max(dists)
    return build_power_of_cycle(n, k), k


def _check_poc_matrix(M: ColorMatrix, bound: int) -> tuple[Graph, int]:
    G, k = _infer_poc(M)
    coloring = matrix_to_coloring(G, M)
    report = verify(G, coloring)
    if not report.is_valid:
        raise ConstructionError(
            f"input matrix is not a valid total coloring "
            f"(first violation: {report.violations[0]})")
    if M.max_color() > bound:
        raise ConstructionError(
            f"input matrix uses {M.max_color()} colors, expected <= {bound}")
    return G, k


def poc_shrink(M: ColorMatrix) -> ColorMatrix:
    """Turn a (2k+1)-color matrix of C_{n+1}^k into one of C_n^k with 2k+2.

    Deletes the last row and column; the k new wrap-around edges (u, u+n-k)
    form a matching and all take the single fresh color 2k+2.
    """
    _, k = _infer_poc(M)
    _check_poc_matrix(M, bound=2 * k + 1)
    n = M.n - 1
    if not (1 <= k < n / 2):
        raise ConstructionError(f"cannot shrink: k={k} out of range for n={n}")
    cells = [list(row[:n]) for row in M.cells[:n]]
    for u in range(k):
        v = u + n - k
        # the wrap edge makes u and v adjacent in C_n^k; their vertex
        # colors come from the base matrix and must already differ
        if cells[u][u] == cells[v][v]:
            raise ConstructionError(
                f"cannot shrink: wrap edge ({u},{v}) joins same-colored "
                f"vertices (color {cells[u][u]})")
        cells[u][v] = 2 * k + 2
        cells[v][u] = 2 * k + 2
    return ColorMatrix.from_rows(cells)


def poc_grow(M: ColorMatrix) -> ColorMatrix:
    """Turn a (2k+1)-color matrix of C_{n-1}^k into one of C_n^k with 2k+2.

    The new last vertex takes over the head of the k-th superdiagonal and
    the old wrap-around entries; the vacated superdiagonal cells and the
    new vertex get the fresh color 2k+2.
    """
    _, k = _infer_poc(M)
    _check_poc_matrix(M, bound=2 * k + 1)
    old_n = M.n
    n = old_n + 1
    v = n - 1
    if not (1 <= k < n / 2):
        raise ConstructionError(f"cannot grow: k={k} out of range for n={n}")
    cells = [list(row) + [0] for row in M.cells]
    cells.append([0] * n)
    for u in range(k):
        # head of the k-th superdiagonal feeds the new forward edges
        cells[u][v] = M.cells[u][u + k]
        cells[v][u] = M.cells[u][u + k]
        cells[u][u + k] = 2 * k + 2
        cells[u + k][u] = 2 * k + 2
        # old wrap-around entries feed the new backward edges
        w = u + old_n - k
        cells[w][v] = M.cells[u][w]
        cells[v][w] = M.cells[u][w]
        cells[u][w] = 0
        cells[w][u] = 0
    cells[v][v] = 2 * k + 2
    # the new vertex's 2k incident edges inherit old boundary colors,
    # which must be pairwise distinct
    inherited = [cells[u][v] for u in range(v) if cells[u][v] != 0]
    if len(inherited) != len(set(inherited)):
        raise ConstructionError(
            "cannot grow: inherited boundary colors collide at the new vertex")
    return ColorMatrix.from_rows(cells)


def poc_any_odd(n: int, k: int) -> ConstructionResult:
    """Total coloring of an odd-order C_n^k within 2k+2 colors.

    Shrinks from C_{n+1}^k or grows from C_{n-1}^k, whichever admits the
    even-order block construction.
    """
    if n % 2 == 0:
        raise ConstructionError(f"n must be odd, got {n}")
    if not (1 <= k < n / 2):
        raise ConstructionError(f"need 1 <= k < n/2, got n={n}, k={k}")
    G = build_power_of_cycle(n, k)
    budget = 2 * k + 2
    if _block_params(n + 1, k) is not None:
        try:
            M = poc_shrink(poc_block(n + 1, k))
        except ConstructionError:
            M = None  # wrap-edge clash; fall back to growing from n - 1
        if M is not None:
            coloring = matrix_to_coloring(G, M)
            return _checked(G, coloring, budget, "poc_shrink",
                            notes=(f"base C_{n + 1}^{k}",))
    if n - 1 > 2 * k and _block_params(n - 1, k) is not None:
        try:
            M = poc_grow(poc_block(n - 1, k))
        except ConstructionError:
            M = None
        if M is not None:
            coloring = matrix_to_coloring(G, M)
            return _checked(G, coloring, budget, "poc_grow",
                            notes=(f"base C_{n - 1}^{k}",))
    raise ConstructionError(
        f"no even-order base instance for C_{n}^{k} at n-1 or n+1")


# ---------------------------------------------------------------------------
# Cayley graph extension

def cayley_extend(G: Graph, c: TotalColoring, table: Sequence[Sequence[int]],
                  S: Iterable[int], S_extra: Iterable[int],
                  budget_nodes: int = 10 ** 6) -> ConstructionResult:
    """Extend a total coloring of Cay(table, S) to Cay(table, S + S_extra).

    The added edges form a regular Cayley graph which is 1-factorized; each
    factor takes one fresh color.
    """
    identity = check_group_table(table)
    norder = len(table)
    S, S_extra = set(S), set(S_extra)
    if norder % 2 != 0:
        raise ConstructionError("group order must be even")
    if S & S_extra:
        raise ConstructionError("S_extra must be disjoint from S")
    for s in S_extra:
        if group_inverse(table, s) not in S_extra:
            raise ConstructionError(f"S_extra not inverse-closed at {s}")
        if s != identity and table[s][s] == identity:
            raise ConstructionError(f"S_extra contains order-two element {s}")
    if identity in S_extra:
        raise ConstructionError("S_extra must not contain the identity")
    # S_extra must generate the whole group
    if S_extra:
        reached = {identity}
        frontier = [identity]
        while frontier:
            a = frontier.pop()
            for s in S_extra:
                b = table[s][a]
                if b not in reached:
                    reached.add(b)
                    frontier.append(b)
        if len(reached) != norder:
            raise ConstructionError("S_extra does not generate the group")
    report = verify(G, c)
    if not report.is_valid:
        raise ConstructionError("input coloring is not a valid total coloring")
    if not S_extra:
        return ConstructionResult(c, report.colors_used, report.colors_used,
                                  "cayley_extend", ("S_extra empty",))
    G2 = build_cayley_from_table(table, S | S_extra)
    added = Graph(norder, frozenset(G2.edges - G.edges))
    factors = one_factorize(added, budget=budget_nodes)
    if factors is None:
        raise BudgetError("added Cayley graph is not 1-factorizable "
                          "within the search budget")
    ec = dict(c.edge_colors)
    palette = c.palette
    for fresh, matching in enumerate(factors, start=1):
        for e in matching:
            ec[e] = palette + fresh
    coloring = TotalColoring(dict(c.vertex_colors), ec, palette + len(factors))
    budget = report.colors_used + (G2.max_degree() - G.max_degree())
    return _checked(G2, coloring, budget, "cayley_extend")


# ---------------------------------------------------------------------------
# unitary Cayley graphs

def unitary_total(n: int) -> ConstructionResult:
    """Total coloring of the unitary Cayley graph X_n with <= phi(n)+2 colors."""
    if n < 2:
        raise ConstructionError("unitary Cayley graph requires n >= 2")
    G = build_unitary_cayley(n)
    phi = euler_phi(n)
    budget = phi + 2
    if is_prime(n):
        return _checked(G, complete_total(n), budget, "unitary_complete")
    if n % 2 == 0:
        ec = bipartite_edge_color(G)
        vc = {v: phi + 1 if v % 2 == 0 else phi + 2 for v in range(n)}
        coloring = TotalColoring(vc, ec, phi + 2)
        return _checked(G, coloring, budget, "unitary_bipartite")
    # odd composite: color the n/p1 consecutive cliques of order p1 with a
    # shared set of p1 colors, then the remaining regular graph with fresh ones
    p1 = smallest_prime_factor(n)
    clique = complete_total(p1)  # p1 odd composite-free => p1 colors
    vc = {}
    ec = {}
    for b in range(n // p1):
        for r in range(p1):
            vc[b * p1 + r] = clique.vertex_colors[r]
        for (r, r2), col in clique.edge_colors.items():
            ec[norm_edge(b * p1 + r, b * p1 + r2)] = col
    rest_edges = G.edges - set(ec)
    rest = Graph(n, frozenset(rest_edges))
    rest_colors = edge_color_plus_one(rest)
    for e, col in rest_colors.items():
        ec[e] = p1 + col
    palette = p1 + rest.max_degree() + 1
    coloring = TotalColoring(vc, ec, palette)
    return _checked(G, coloring, budget, "unitary_cliques")


# ---------------------------------------------------------------------------
# mock threshold graphs

MOCK_THRESHOLD_SEARCH_BUDGET = 10 ** 7


def _complete_embed(G: Graph, verts: Sequence[int]) -> tuple[dict, dict]:
    """Total-color K_{|verts|} and keep only the colors of actual edges."""
    base = complete_total(len(verts))
    vc = {verts[t]: base.vertex_colors[t] for t in range(len(verts))}
    ec = {}
    for (a, b), col in base.edge_colors.items():
        u, v = verts[a], verts[b]
        if G.has_edge(u, v):
            ec[norm_edge(u, v)] = col
    return vc, ec


def mock_threshold_total(G: Graph, script: MockThresholdScript,
                         search_budget: int = MOCK_THRESHOLD_SEARCH_BUDGET
                         ) -> ConstructionResult:
    """Inductive total coloring of a mock threshold graph within Delta+2.

    Follows the build script case by case: isolated and pendant vertices
    extend the current coloring greedily; dominant steps recolor through a
    complete-graph embedding; co-dominant steps embed the neighborhood
    clique when the prefix order is even and fall back to a bounded exact
    search when it is odd.
    """
    from .oracle import find_total_coloring

    if build_mock_threshold(script).edges != G.edges or G.n != len(script.steps):
        raise ConstructionError("script does not build the given graph")
    notes: list[str] = []
    vc: dict[int, int] = {}
    ec: dict = {}
    palette = 0
    for idx in range(G.n):
        verts = list(range(idx + 1))
        H = Graph(idx + 1, frozenset(e for e in G.edges
                                     if e[0] <= idx and e[1] <= idx))
        p = idx  # prefix size before this vertex
        d = H.degree(idx)
        delta = H.max_degree()
        limit = delta + 2
        if d == 0:
            vc[idx] = 1
            palette = max(palette, 1)
        elif d == 1:
            u = next(iter(H.neighbors(idx)))
            partial = TotalColoring(dict(vc), dict(ec), limit)
            e = norm_edge(u, idx)
            free_e = sorted(c for c in missing_colors(H, partial, e, limit)
                            if c != vc[u])
            ec[e] = free_e[0]
            free_v = sorted(set(range(1, limit + 1)) - {ec[e], vc[u]})
            vc[idx] = free_v[0]
            palette = max(palette, ec[e], vc[idx])
        elif delta == p:
            # some vertex dominates the prefix: embed in K_{p+1}
            vc, ec = _complete_embed(H, verts)
            palette = max([*vc.values(), *ec.values()])
        elif d == p - 1 and p % 2 == 0:
            # neighborhood clique K_p has odd order p+... p even: color it
            # with p+1 colors and route the non-neighbor through the
            # per-line missing colors
            w = next(x for x in range(p) if not H.has_edge(x, idx))
            others = [x for x in verts if x != w]  # p vertices, idx last
            base = complete_total(p)  # p even: palette p+1
            vc = {}
            ec = {}
            pos = {others[t]: t for t in range(p)}
            for t in range(p):
                vc[others[t]] = base.vertex_colors[t]
            for (a, b), col in base.edge_colors.items():
                u, v = others[a], others[b]
                if H.has_edge(u, v):
                    ec[norm_edge(u, v)] = col
            for u in sorted(H.neighbors(w)):
                t = pos[u]
                ec[norm_edge(w, u)] = (t + 1) % p + 1  # line t misses this color
            vc[w] = p + 1
            palette = max([*vc.values(), *ec.values()])
        elif d == p - 1:
            # odd prefix order: H has even order with degree gap 2; a
            # (Delta+2)-coloring exists, find one exactly
            found = find_total_coloring(H, limit, budget=search_budget)
            if found is None:
                raise BudgetError(
                    f"exact search budget exhausted at step {idx}")
            notes.append(f"exact search at step {idx}")
            vc = dict(found.vertex_colors)
            ec = dict(found.edge_colors)
            palette = max([*vc.values(), *ec.values()])
        else:
            raise ConstructionError(
                f"step {idx} has prefix degree {d}, not a mock threshold step")
    coloring = TotalColoring(vc, ec, palette)
    return _checked(G, coloring, G.max_degree() + 2, "mock_threshold", notes)


# ---------------------------------------------------------------------------
# odd graphs

def odd_graph_total(m: int) -> ConstructionResult:
    """Total coloring of the odd graph O_m with at most m+2 colors.

    Splits the vertices on a distinguished ground element: the subsets
    containing it form a maximum independent set, the rest induce a perfect
    matching of complementary pairs.
    """
    if m < 2:
        raise ConstructionError("odd graph requires m >= 2")
    G = build_odd_graph(m)
    labels = kneser_vertex_labels(2 * m - 1, m - 1)
    x = 2 * m - 2  # distinguished ground element: the largest
    I = [v for v, s in enumerate(labels) if x in s]
    Mside = [v for v, s in enumerate(labels) if x not in s]
    mset = set(Mside)
    matching = []
    ground = set(range(2 * m - 2))
    comp_index = {labels[v]: v for v in Mside}
    seen = set()
    for v in Mside:
        if v in seen:
            continue
        partner = comp_index[tuple(sorted(ground - set(labels[v])))]
        matching.append((v, partner))
        seen.update((v, partner))
    bip_edges = frozenset(e for e in G.edges
                          if (e[0] in mset) != (e[1] in mset))
    bip = Graph(G.n, bip_edges)
    ec = dict(bipartite_edge_color(bip))  # colors 1..m
    vc = {}
    for v in I:
        vc[v] = m + 1
    for (a, b) in matching:
        ec[norm_edge(a, b)] = m + 1
        # the endpoint whose subset contains the smallest ground element
        # takes the second fresh color
        first, second = (a, b) if 0 in labels[a] else (b, a)
        vc[first] = m + 2
        used = {ec[norm_edge(second, w)] for w in G.neighbors(second)}
        free = sorted(set(range(1, m + 1)) - used)
        vc[second] = free[0]
    coloring = TotalColoring(vc, ec, m + 2)
    return _checked(G, coloring, m + 2, "odd_graph")
