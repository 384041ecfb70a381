"""Graph families used throughout the package.

All graphs are finite, simple and undirected, with vertices 0..n-1.
Builders cover circulants (including powers of cycles), unitary Cayley
graphs, Kneser/odd graphs, mock threshold graphs and Cayley graphs of
groups given by explicit multiplication tables.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (u, v) in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized (need u < v)")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return Graph(n, norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, u: int) -> set[int]:
        return self._adjacency()[u]

    def _adjacency(self) -> list[set[int]]:
        # cached lazily; object is logically immutable
        adj = getattr(self, "_adj_cache", None)
        if adj is None:
            adj = [set() for _ in range(self.n)]
            for (u, v) in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj_cache", adj)
        return adj

    def degree(self, u: int) -> int:
        return len(self._adjacency()[u])

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(self.degree(u) for u in range(self.n))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_regular(self) -> bool:
        degs = {self.degree(u) for u in range(self.n)}
        return len(degs) <= 1

    def to_json(self, labels: Optional[Sequence[Sequence[int]]] = None) -> str:
        doc = {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}
        if labels is not None:
            doc["labels"] = [list(s) for s in labels]
        return json.dumps(doc)

    @staticmethod
    def from_json(text: str) -> "Graph":
        doc = json.loads(text)
        return Graph.from_edges(doc["n"], doc["edges"])

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.m}"]
        lines += [f"e {u + 1} {v + 1}" for (u, v) in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_dimacs(text: str) -> "Graph":
        n = None
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise ValueError("edge line before problem line")
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        if n is None:
            raise ValueError("missing problem line")
        return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# number-theoretic helpers

def euler_phi(n: int) -> int:
    """Count of units modulo n."""
    if n < 1:
        raise ValueError("phi requires n >= 1")
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("smallest_prime_factor requires n >= 2")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


# ---------------------------------------------------------------------------
# circulant-type families

def build_circulant(n: int, distances: Iterable[int]) -> Graph:
    """Circulant graph on Z_n: u ~ v iff (u - v) mod n is +-d for some d."""
    if n < 1:
        raise ValueError("n must be positive")
    dset = set(distances)
    for d in dset:
        if not (1 <= d <= n // 2):
            raise ValueError(f"distance {d} out of range 1..{n // 2}")
    edges = set()
    for u in range(n):
        for d in dset:
            v = (u + d) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def build_power_of_cycle(n: int, k: int) -> Graph:
    """C_n^k: circulant with distance set {1, ..., k}; 2k-regular."""
    if not (1 <= k < n / 2):
        raise ValueError(f"power of cycle requires 1 <= k < n/2, got n={n}, k={k}")
    return build_circulant(n, range(1, k + 1))


def build_unitary_cayley(n: int) -> Graph:
    """X_n: vertices Z_n, edges between residues with unit difference."""
    if n <= 1:
        raise ValueError("unitary Cayley graph requires n > 1")
    units = {d for d in range(1, n) if math.gcd(d, n) == 1}
    edges = set()
    for u in range(n):
        for d in units:
            v = (u + d) % n
            edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Kneser / odd graphs

def kneser_vertex_labels(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {0..n-1} in lexicographic order; index = vertex id."""
    return list(combinations(range(n), k))


def build_kneser(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of an n-set, adjacent iff disjoint."""
    if not (1 <= k <= n):
        raise ValueError(f"kneser requires 1 <= k <= n, got n={n}, k={k}")
    labels = kneser_vertex_labels(n, k)
    sets = [frozenset(s) for s in labels]
    edges = set()
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not (sets[i] & sets[j]):
                edges.add((i, j))
    return Graph(len(sets), frozenset(edges))


def build_odd_graph(m: int) -> Graph:
    """Odd graph O_m = Kneser(2m-1, m-1); m-regular."""
    if m < 2:
        raise ValueError("odd graph requires m >= 2")
    return build_kneser(2 * m - 1, m - 1)


# ---------------------------------------------------------------------------
# mock threshold graphs

ISOLATED = "isolated"
PENDANT = "pendant"
CODOMINANT = "codominant"
DOMINANT = "dominant"


@dataclass(frozen=True)
class MockThresholdStep:
    kind: str
    ref: Optional[int] = None  # 0-based index of the referenced earlier vertex

    def __post_init__(self):
        if self.kind not in (ISOLATED, PENDANT, CODOMINANT, DOMINANT):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.kind in (PENDANT, CODOMINANT) and self.ref is None:
            raise ValueError(f"{self.kind} step needs a referenced vertex")


@dataclass(frozen=True)
class MockThresholdScript:
    """Build script: vertex i enters with prefix degree 0, 1, i-1 or i."""

    steps: tuple[MockThresholdStep, ...]
    # optional vertex relabeling discovered by recognition: order[i] is the
    # original label of the vertex built at step i
    order: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        for i, step in enumerate(self.steps):
            if step.ref is not None and not (0 <= step.ref < i):
                raise ValueError(
                    f"step {i} references vertex {step.ref}, need 0 <= ref < {i}")


def build_mock_threshold(script: MockThresholdScript) -> Graph:
    edges = set()
    for i, step in enumerate(script.steps):
        if step.kind == ISOLATED:
            continue
        if step.kind == PENDANT:
            edges.add((step.ref, i))
        elif step.kind == DOMINANT:
            for j in range(i):
                edges.add((j, i))
        else:  # codominant: adjacent to all previous except ref
            for j in range(i):
                if j != step.ref:
                    edges.add((j, i))
    return Graph(len(script.steps), frozenset(edges))


def recognize_mock_threshold(G: Graph) -> Optional[MockThresholdScript]:
    """Search for a mock threshold build order by backtracking peel.

    Returns a script whose ``order`` field maps build positions to original
    vertex labels, or None when no peel order exists.  At each level the
    peel tries removable vertices in increasing label order.
    """
    adj = {u: set(G.neighbors(u)) for u in range(G.n)}
    peeled: list[MockThresholdStep] = []
    order: list[int] = []

    def peel(live: set[int]) -> bool:
        h = len(live)
        if h == 0:
            return True
        for v in sorted(live):
            d = len(adj[v] & live)
            step = None
            if d == 0:
                step = MockThresholdStep(ISOLATED)
            elif d == 1:
                step = MockThresholdStep(PENDANT, next(iter(adj[v] & live)))
            elif d == h - 1:
                step = MockThresholdStep(DOMINANT)
            elif d == h - 2:
                non = (live - adj[v]) - {v}
                step = MockThresholdStep(CODOMINANT, next(iter(non)))
            if step is None:
                continue
            peeled.append(step)
            order.append(v)
            if peel(live - {v}):
                return True
            peeled.pop()
            order.pop()
        return False

    if not peel(set(range(G.n))):
        return None
    build_order = list(reversed(order))
    pos = {v: i for i, v in enumerate(build_order)}
    steps = []
    for step in reversed(peeled):
        ref = pos[step.ref] if step.ref is not None else None
        steps.append(MockThresholdStep(step.kind, ref))
    return MockThresholdScript(tuple(steps), order=tuple(build_order))


# ---------------------------------------------------------------------------
# Cayley graphs from explicit multiplication tables

DEFAULT_MAX_GROUP_ORDER = 64


def check_group_table(table: Sequence[Sequence[int]],
                      max_order: int = DEFAULT_MAX_GROUP_ORDER) -> int:
    """Validate a multiplication table as a group; return the identity."""
    n = len(table)
    if n == 0 or n > max_order:
        raise ValueError(f"group order must be in 1..{max_order}")
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ValueError("table is not an n x n array over 0..n-1")
    identity = None
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")
    for a in range(n):
        if identity not in table[a]:
            raise ValueError(f"element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(
                        f"table is not associative at ({a},{b},{c})")
    return identity


def group_inverse(table: Sequence[Sequence[int]], a: int) -> int:
    identity = next(e for e in range(len(table))
                    if all(table[e][x] == x for x in range(len(table))))
    for b in range(len(table)):
        if table[a][b] == identity:
            return b
    raise ValueError(f"element {a} has no inverse")


def order_two_element(table: Sequence[Sequence[int]]) -> Optional[int]:
    """An element s != identity with s*s = identity, or None."""
    identity = check_group_table(table)
    for s in range(len(table)):
        if s != identity and table[s][s] == identity:
            return s
    return None


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def build_cayley_from_table(table: Sequence[Sequence[int]],
                            S: Iterable[int],
                            max_order: int = DEFAULT_MAX_GROUP_ORDER) -> Graph:
    """Cayley graph Cay(Gamma, S): a ~ b iff a * b^-1 in S."""
    identity = check_group_table(table, max_order=max_order)
    n = len(table)
    sset = set(S)
    if identity in sset:
        raise ValueError("connection set must not contain the identity")
    for s in sset:
        if not (0 <= s < n):
            raise ValueError(f"connection element {s} out of range")
        if group_inverse(table, s) not in sset:
            raise ValueError(f"connection set not inverse-closed at {s}")
    edges = set()
    for a in range(n):
        for s in sset:
            b = table[s][a]  # b = s*a, so b * a^-1 = s
            edges.add((min(a, b), max(a, b)))
    return Graph(n, frozenset(edges))
