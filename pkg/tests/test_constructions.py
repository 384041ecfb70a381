import math
import random
from pathlib import Path

import pytest

from totalcoloring.graphs import (MockThresholdScript, MockThresholdStep,
                                  build_mock_threshold, build_odd_graph,
                                  build_power_of_cycle, build_unitary_cayley,
                                  cyclic_group_table, build_cayley_from_table,
                                  euler_phi, recognize_mock_threshold)
from totalcoloring.coloring import ColorMatrix, matrix_to_coloring, verify
from totalcoloring.constructions import (ConstructionError, cayley_extend,
                                         mock_threshold_total, odd_graph_total,
                                         poc_any_odd, poc_augment, poc_base,
                                         poc_block, poc_grow, poc_shrink,
                                         unitary_total)

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return ColorMatrix.from_csv((FIXTURES / name).read_text())


# --- frozen matrices -------------------------------------------------------

def test_base_matrix_c10_2():
    assert poc_base(10) == load_fixture("c10_2.csv")


def test_block_matrix_c20_4():
    assert poc_block(20, 4) == load_fixture("c20_4.csv")


def test_block_matrix_c18_5():
    assert poc_block(18, 5) == load_fixture("c18_5.csv")


def test_shrink_matrix_c13_3():
    assert poc_shrink(poc_block(14, 3)) == load_fixture("c13_3.csv")


def test_grow_matrix_c15_3():
    assert poc_grow(poc_block(14, 3)) == load_fixture("c15_3.csv")


# --- validity over parameter ranges ---------------------------------------

def test_poc_base_exact_color_count():
    for k in range(1, 12):
        n = 2 * (2 * k + 1)
        M = poc_base(n)
        G = build_power_of_cycle(n, k)
        report = verify(G, matrix_to_coloring(G, M))
        assert report.is_valid and report.colors_used == 2 * k + 1


def test_poc_base_rejects_wrong_order():
    with pytest.raises(ConstructionError):
        poc_base(12)  # 12 != 2(2k+1) for any k


def test_poc_block_admissible_range():
    checked = 0
    for n in range(6, 81, 2):
        for k in range(2, n // 2):
            try:
                M = poc_block(n, k)
            except ConstructionError:
                continue
            G = build_power_of_cycle(n, k)
            report = verify(G, matrix_to_coloring(G, M))
            assert report.is_valid and report.colors_used == 2 * k + 1, (n, k)
            checked += 1
    assert checked > 30


def test_poc_shrink_and_grow_validity():
    for n in range(6, 61, 2):
        for k in range(2, n // 2):
            try:
                M = poc_block(n, k)
            except ConstructionError:
                continue
            try:
                Ms = poc_shrink(M)
            except ConstructionError:
                Ms = None  # wrap-edge clash (q = k + 1 bases); no shrink
            if Ms is not None:
                Gs = build_power_of_cycle(n - 1, k)
                rs = verify(Gs, matrix_to_coloring(Gs, Ms))
                assert rs.is_valid and rs.colors_used <= 2 * k + 2, ("shrink", n, k)
            try:
                Mg = poc_grow(M)
            except ConstructionError:
                Mg = None  # inherited boundary colors collide (q = k + 1)
            if Mg is not None:
                Gg = build_power_of_cycle(n + 1, k)
                rg = verify(Gg, matrix_to_coloring(Gg, Mg))
                assert rg.is_valid and rg.colors_used <= 2 * k + 2, ("grow", n, k)


def test_poc_augment():
    for n in [6, 10, 14, 22]:
        k0 = (n - 2) // 4
        for k in range(k0, n // 2):
            try:
                c = poc_augment(n, k)
            except ConstructionError:
                continue
            G = build_power_of_cycle(n, k)
            report = verify(G, c)
            assert report.is_valid and report.colors_used <= 2 * k + 1


def test_poc_any_odd():
    hits = 0
    for n in range(5, 41, 2):
        for k in range(2, n // 2):
            try:
                res = poc_any_odd(n, k)
            except ConstructionError:
                continue
            assert res.colors_used <= 2 * k + 2
            hits += 1
    assert hits > 10


# --- Cayley extension ------------------------------------------------------

def test_cayley_extend_cyclic():
    table = cyclic_group_table(10)
    G0 = build_cayley_from_table(table, {1, 2, 8, 9})
    c0 = matrix_to_coloring(G0, poc_base(10))
    res = cayley_extend(G0, c0, table, {1, 2, 8, 9}, {3, 7})
    G1 = build_cayley_from_table(table, {1, 2, 3, 7, 8, 9})
    assert verify(G1, res.coloring).is_valid
    assert res.colors_used <= c0.palette + 2


def test_cayley_extend_rejects_order_two_generator():
    table = cyclic_group_table(10)
    G0 = build_cayley_from_table(table, {1, 9})
    from totalcoloring.oracle import find_total_coloring
    c0 = find_total_coloring(G0, 4)
    with pytest.raises(ConstructionError):
        cayley_extend(G0, c0, table, {1, 9}, {5})  # 5 has order two in Z_10


# --- unitary Cayley graphs -------------------------------------------------

@pytest.mark.parametrize("n", list(range(2, 31)))
def test_unitary_total(n):
    res = unitary_total(n)
    G = build_unitary_cayley(n)
    report = verify(G, res.coloring)
    assert report.is_valid
    assert report.colors_used <= euler_phi(n) + 2


def test_unitary_methods_by_branch():
    assert unitary_total(13).method == "unitary_complete"
    assert unitary_total(12).method == "unitary_bipartite"
    assert unitary_total(15).method == "unitary_cliques"


# --- mock threshold graphs -------------------------------------------------

def random_script(rng, max_n):
    n = rng.randint(1, max_n)
    steps = [MockThresholdStep("isolated", None)]
    for i in range(1, n):
        kind = rng.choice(["isolated", "pendant", "codominant", "dominant"])
        ref = rng.randrange(i) if kind in ("pendant", "codominant") else None
        steps.append(MockThresholdStep(kind, ref))
    return MockThresholdScript(tuple(steps), tuple(range(n)))


def test_mock_threshold_total_random():
    rng = random.Random(7)
    for _ in range(150):
        script = random_script(rng, 12)
        G = build_mock_threshold(script)
        res = mock_threshold_total(G, script)
        report = verify(G, res.coloring)
        assert report.is_valid
        assert report.colors_used <= G.max_degree() + 2


def test_mock_threshold_recognition_roundtrip_random():
    rng = random.Random(8)
    for _ in range(100):
        G = build_mock_threshold(random_script(rng, 10))
        rec = recognize_mock_threshold(G)
        assert rec is not None
        G2 = build_mock_threshold(rec)
        perm = {i: rec.order[i] for i in range(G.n)}
        relabeled = frozenset(tuple(sorted((perm[u], perm[v])))
                              for u, v in G2.edges)
        assert relabeled == G.edges


# --- odd graphs ------------------------------------------------------------

@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_odd_graph_total(m):
    res = odd_graph_total(m)
    G = build_odd_graph(m)
    report = verify(G, res.coloring)
    assert report.is_valid
    assert report.colors_used <= m + 2


def test_odd_graph_petersen_palette():
    # O_3 (Petersen) gets exactly m + 2 = 5 colors from this construction
    assert odd_graph_total(3).colors_used == 5
