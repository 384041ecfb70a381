"""Total colorings, color matrices, verification and edge-coloring subroutines.

Colors are positive integers 1..palette throughout; 0 is the "no entry"
sentinel in color matrices.  A total coloring is valid when adjacent
vertices, adjacent edges, and incident vertex/edge pairs all receive
distinct colors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graphs import Graph

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TotalColoring:
    vertex_colors: dict[int, int]
    edge_colors: dict[Edge, int]
    palette: int

    def colors_used(self) -> int:
        return len(set(self.vertex_colors.values()) | set(self.edge_colors.values()))

    def to_json(self, n: Optional[int] = None) -> str:
        if n is None:
            n = max(self.vertex_colors, default=-1) + 1
        verts = [self.vertex_colors[v] for v in range(n)]
        edges = [[u, v, c] for (u, v), c in sorted(self.edge_colors.items())]
        return json.dumps({"vertices": verts, "edges": edges})

    @staticmethod
    def from_json(text: str) -> "TotalColoring":
        doc = json.loads(text)
        vc = {i: c for i, c in enumerate(doc["vertices"])}
        ec = {norm_edge(u, v): c for u, v, c in doc["edges"]}
        palette = max(list(vc.values()) + list(ec.values()), default=0)
        return TotalColoring(vc, ec, palette)


@dataclass(frozen=True)
class ColorMatrix:
    """Symmetric matrix: diagonal = vertex colors, (i,j) = color of edge {i,j}."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise ValueError("cells must be an n x n array")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.cells[i][j] != self.cells[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "ColorMatrix":
        return ColorMatrix(len(rows), tuple(tuple(int(x) for x in r) for r in rows))

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.cells) + "\n"

    @staticmethod
    def from_csv(text: str) -> "ColorMatrix":
        rows = [[int(x) for x in line.split(",")]
                for line in text.strip().splitlines()]
        return ColorMatrix.from_rows(rows)

    def max_color(self) -> int:
        return max((x for row in self.cells for x in row), default=0)


def coloring_to_matrix(G: Graph, c: TotalColoring) -> ColorMatrix:
    cells = [[0] * G.n for _ in range(G.n)]
    for v in range(G.n):
        cells[v][v] = c.vertex_colors[v]
    for (u, v), col in c.edge_colors.items():
        cells[u][v] = col
        cells[v][u] = col
    return ColorMatrix.from_rows(cells)


def matrix_to_coloring(G: Graph, M: ColorMatrix) -> TotalColoring:
    """Inverse of coloring_to_matrix; support must match the graph exactly."""
    if M.n != G.n:
        raise ValueError(f"matrix order {M.n} != graph order {G.n}")
    vc = {}
    for v in range(G.n):
        if M.cells[v][v] == 0:
            raise ValueError(f"missing vertex color at diagonal cell ({v},{v})")
        vc[v] = M.cells[v][v]
    ec = {}
    for i in range(G.n):
        for j in range(i + 1, G.n):
            entry = M.cells[i][j]
            if G.has_edge(i, j):
                if entry == 0:
                    raise ValueError(f"missing edge color at cell ({i},{j})")
                ec[(i, j)] = entry
            elif entry != 0:
                raise ValueError(f"spurious entry {entry} at non-edge cell ({i},{j})")
    palette = max(max(vc.values()), max(ec.values(), default=0))
    return TotalColoring(vc, ec, palette)


# ---------------------------------------------------------------------------
# verification

VERTEX_VERTEX = "vertex-vertex"
EDGE_EDGE = "edge-edge"
VERTEX_EDGE = "vertex-edge"
MISSING = "missing"
SPURIOUS = "spurious"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]
    colors_used: int

    @property
    def is_valid(self) -> bool:
        return not self.violations


def verify(G: Graph, c: TotalColoring) -> VerificationReport:
    """Check conditions (a)-(c) plus domain coverage; report every violation."""
    out: list[Violation] = []
    for v in range(G.n):
        if v not in c.vertex_colors:
            out.append(Violation(MISSING, ("vertex", v)))
    for v in c.vertex_colors:
        if not (0 <= v < G.n):
            out.append(Violation(SPURIOUS, ("vertex", v)))
    for e in G.sorted_edges():
        if e not in c.edge_colors:
            out.append(Violation(MISSING, ("edge", e)))
    for e in c.edge_colors:
        if e not in G.edges:
            out.append(Violation(SPURIOUS, ("edge", e)))

    # (a) adjacent vertices
    for (u, v) in G.sorted_edges():
        cu, cv = c.vertex_colors.get(u), c.vertex_colors.get(v)
        if cu is not None and cu == cv:
            out.append(Violation(VERTEX_VERTEX, (u, v)))

    # (b), (c): scan each vertex star for color collisions; two edges are
    # adjacent iff they share a vertex, so every conflict shows up in a star
    for v in range(G.n):
        by_color: dict[int, list[tuple]] = {}
        cv = c.vertex_colors.get(v)
        if cv is not None:
            by_color.setdefault(cv, []).append(("vertex", v))
        for w in sorted(G.neighbors(v)):
            e = norm_edge(v, w)
            ce = c.edge_colors.get(e)
            if ce is not None:
                by_color.setdefault(ce, []).append(("edge", e))
        for elems in by_color.values():
            for a in range(len(elems)):
                for b in range(a + 1, len(elems)):
                    x, y = elems[a], elems[b]
                    if x[0] == "vertex":
                        out.append(Violation(VERTEX_EDGE, (v, y[1])))
                    else:
                        out.append(Violation(EDGE_EDGE, tuple(sorted((x[1], y[1])))))
    uniq = list(dict.fromkeys(out))
    return VerificationReport(tuple(uniq), c.colors_used())


def missing_colors(G: Graph, partial: TotalColoring,
                   element: Union[int, Edge], palette: int) -> set[int]:
    """Palette colors not used by any element adjacent or incident to `element`.

    For a vertex: excludes adjacent vertex colors and incident edge colors.
    For an edge: excludes endpoint colors and colors of edges sharing an
    endpoint.  The element's own color (if any) is not excluded.
    """
    used: set[int] = set()
    if isinstance(element, int):
        v = element
        for w in G.neighbors(v):
            cw = partial.vertex_colors.get(w)
            if cw is not None:
                used.add(cw)
            ce = partial.edge_colors.get(norm_edge(v, w))
            if ce is not None:
                used.add(ce)
    else:
        u, v = element
        for x in (u, v):
            cx = partial.vertex_colors.get(x)
            if cx is not None:
                used.add(cx)
            for w in G.neighbors(x):
                e = norm_edge(x, w)
                if e != norm_edge(u, v):
                    ce = partial.edge_colors.get(e)
                    if ce is not None:
                        used.add(ce)
    return set(range(1, palette + 1)) - used


# ---------------------------------------------------------------------------
# complete graphs (transposition-based construction)

def _even_complete_edge_color(n: int) -> dict[Edge, int]:
    """(n+1)-edge-coloring of K_n for even n, colors 1..n+1.

    Built from tau_i, the transposition of i and n-1 on {0..n-1}:
    color(i,j) = (tau_i(j) + tau_j(i) + 2) mod (n+1), shifted to 1-based.
    Line k misses (0-based) colors k and (k+1) mod n.
    """
    def tau(k: int, x: int) -> int:
        if x == k:
            return n - 1
        if x == n - 1:
            return k
        return x

    colors = {}
    for i in range(n):
        for j in range(i + 1, n):
            colors[(i, j)] = (tau(i, j) + tau(j, i) + 2) % (n + 1) + 1
    return colors


def complete_total(n: int) -> TotalColoring:
    """Total coloring of K_n: n colors for odd n (n > 1), n+1 otherwise."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return TotalColoring({0: 1}, {}, 1)
    if n % 2 == 0:
        ec = _even_complete_edge_color(n)
        vc = {i: i + 1 for i in range(n)}
        return TotalColoring(vc, ec, n + 1)
    # odd: color K_{n-1} with n colors, then route the last vertex's edges
    # through the per-line missing colors
    ec = _even_complete_edge_color(n - 1)
    vc = {i: i + 1 for i in range(n - 1)}
    for k in range(n - 1):
        ec[(k, n - 1)] = (k + 1) % (n - 1) + 1
    incident = {ec[(k, n - 1)] for k in range(n - 1)}
    free = sorted(set(range(1, n + 1)) - incident)
    vc[n - 1] = free[0]
    return TotalColoring(vc, ec, n)


# ---------------------------------------------------------------------------
# edge-coloring subroutines

def _bipartition(G: Graph) -> Optional[tuple[set[int], set[int]]]:
    color = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    left = {v for v, c in color.items() if c == 0}
    return left, set(range(G.n)) - left


def bipartite_edge_color(G: Graph) -> dict[Edge, int]:
    """Proper edge coloring of a bipartite graph with exactly Delta colors.

    Alternating-path augmentation: when the endpoints of an edge have no
    common free color, swap an a/b alternating path.
    """
    if _bipartition(G) is None:
        raise ValueError("graph is not bipartite")
    delta = G.max_degree()
    colors: dict[Edge, int] = {}
    at = [dict() for _ in range(G.n)]  # at[v][color] = other endpoint

    def free(v: int) -> int:
        for col in range(1, delta + 1):
            if col not in at[v]:
                return col
        raise AssertionError("no free color below Delta+1")

    for (u, v) in G.sorted_edges():
        a, b = free(u), free(v)
        if a != b:
            # flip the a/b alternating path starting at v (which lacks a)
            x, col = v, a
            path = []
            while col in at[x]:
                y = at[x][col]
                path.append((x, y, col))
                x, col = y, (b if col == a else a)
            for (x, y, col) in path:
                del at[x][col]
                del at[y][col]
            for (x, y, col) in path:
                other = b if col == a else a
                colors[norm_edge(x, y)] = other
                at[x][other] = y
                at[y][other] = x
        colors[(u, v)] = a
        at[u][a] = v
        at[v][a] = u
    return colors


def edge_color_plus_one(G: Graph) -> dict[Edge, int]:
    """Proper edge coloring with at most Delta+1 colors (fan recoloring).

    Deterministic: edges processed in sorted order, lowest free color first.
    """
    delta = G.max_degree()
    npal = delta + 1
    colors: dict[Edge, int] = {}
    at = [dict() for _ in range(G.n)]  # at[v][color] = neighbor across that color

    def free(v: int) -> int:
        for col in range(1, npal + 1):
            if col not in at[v]:
                return col
        raise AssertionError("vertex saturated beyond Delta+1")

    def set_color(u: int, v: int, col: int) -> None:
        e = norm_edge(u, v)
        old = colors.get(e)
        if old is not None:
            del at[u][old]
            del at[v][old]
        colors[e] = col
        at[u][col] = v
        at[v][col] = u

    for (u, v) in G.sorted_edges():
        # build a maximal fan of u starting at v
        fan = [v]
        fan_set = {v}
        while True:
            last = fan[-1]
            grown = False
            for col in sorted(at[u]):
                w = at[u][col]
                if w not in fan_set and col not in at[last]:
                    fan.append(w)
                    fan_set.add(w)
                    grown = True
                    break
            if grown:
                continue
            break
        c = free(u)
        d = free(fan[-1])
        if c != d:
            # invert the maximal cd-path starting at u (first edge colored d)
            x, col = u, d
            path = []
            while col in at[x]:
                y = at[x][col]
                path.append((x, y))
                x, col = y, (c if col == d else d)
            olds = []
            for (x, y) in path:
                col = colors.pop(norm_edge(x, y))
                olds.append(col)
                del at[x][col]
                del at[y][col]
            for (x, y), col in zip(path, olds):
                new = c if col == d else d
                colors[norm_edge(x, y)] = new
                at[x][new] = y
                at[y][new] = x
        # find the shortest fan prefix ending at a vertex where d is free;
        # the prefix must still satisfy the fan condition after inversion
        w_idx = None
        for idx, fv in enumerate(fan):
            if d in at[fv]:
                continue
            ok = True
            for t in range(1, idx + 1):
                e = norm_edge(u, fan[t])
                col = colors.get(e)
                if col is None or col in at[fan[t - 1]]:
                    ok = False
                    break
            if ok:
                w_idx = idx
                break
        if w_idx is None:
            raise AssertionError("fan recoloring failed to free a color")
        # rotate the prefix: shift each color one step toward the open edge
        shifted = [colors[norm_edge(u, fan[t + 1])] for t in range(w_idx)]
        for t in range(1, w_idx + 1):
            e = norm_edge(u, fan[t])
            col = colors.pop(e)
            del at[u][col]
            del at[fan[t]][col]
        for t in range(w_idx):
            set_color(u, fan[t], shifted[t])
        set_color(u, fan[w_idx], d)
    return colors


def hamiltonian_split(n: int, d: int) -> tuple[list[Edge], list[Edge]]:
    """Split the distance-d circulant 2-factor into two perfect matchings.

    Requires n even and gcd(n, d) = 1, so the 2-factor is a single even
    Hamiltonian cycle 0, d, 2d, ...; matchings alternate along it.
    """
    if n % 2 != 0:
        raise ValueError("n must be even")
    if math.gcd(n, d) != 1:
        raise ValueError(f"gcd({n},{d}) != 1: distance-{d} factor is not a single cycle")
    m1, m2 = [], []
    for i in range(n):
        u = (i * d) % n
        v = ((i + 1) * d) % n
        (m1 if i % 2 == 0 else m2).append(norm_edge(u, v))
    return m1, m2


def one_factorize(G: Graph, budget: int = 10 ** 6) -> Optional[list[list[Edge]]]:
    """Partition a regular even-order graph into Delta perfect matchings.

    Backtracking peel, lexicographically smallest matching first.  Returns
    None when the search space (or the node budget) is exhausted.
    """
    if G.n % 2 != 0:
        raise ValueError("1-factorization requires an even number of vertices")
    if not G.is_regular():
        raise ValueError("1-factorization requires a regular graph")
    delta = G.max_degree()
    adj = [sorted(G.neighbors(v)) for v in range(G.n)]
    remaining = {e: True for e in G.sorted_edges()}
    nodes = 0
    factors: list[list[Edge]] = []

    def perfect_matchings(avail: set[Edge]):
        """Yield perfect matchings of the graph with edge set avail, lex order."""
        nonlocal nodes
        matched: list[Edge] = []
        used = [False] * G.n

        def extend():
            nonlocal nodes
            u = next((x for x in range(G.n) if not used[x]), None)
            if u is None:
                yield list(matched)
                return
            nodes += 1
            if nodes > budget:
                raise _Budget()
            for w in adj[u]:
                if used[w]:
                    continue
                e = norm_edge(u, w)
                if e not in avail:
                    continue
                used[u] = used[w] = True
                matched.append(e)
                yield from extend()
                matched.pop()
                used[u] = used[w] = False

        yield from extend()

    class _Budget(Exception):
        pass

    def solve(avail: set[Edge], depth: int) -> bool:
        if depth == delta:
            return not avail
        for m in perfect_matchings(avail):
            factors.append(m)
            if solve(avail - set(m), depth + 1):
                return True
            factors.pop()
        return False

    try:
        if solve(set(remaining), 0):
            return factors
    except _Budget:
        return None
    return None
