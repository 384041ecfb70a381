import pytest

from totalcoloring.graphs import (Graph, MockThresholdScript, MockThresholdStep,
                                  build_cayley_from_table, build_circulant,
                                  build_kneser, build_mock_threshold,
                                  build_odd_graph, build_power_of_cycle,
                                  build_unitary_cayley, check_group_table,
                                  cyclic_group_table, euler_phi, group_inverse,
                                  is_prime, kneser_vertex_labels,
                                  order_two_element, recognize_mock_threshold,
                                  smallest_prime_factor)


def complete(n):
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def test_graph_basics():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert G.m == 4
    assert G.degree(0) == 2 and G.max_degree() == 2
    assert G.has_edge(1, 0) and not G.has_edge(0, 2)
    assert G.neighbors(2) == {1, 3}
    assert G.is_regular()


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_json_roundtrip():
    G = build_power_of_cycle(9, 2)
    assert Graph.from_json(G.to_json()) == G


def test_dimacs_roundtrip():
    G = build_circulant(8, [1, 3])
    text = G.to_dimacs()
    assert text.startswith("p edge 8 ")
    assert Graph.from_dimacs(text) == G


def test_number_theory_helpers():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert smallest_prime_factor(91) == 7
    assert is_prime(97) and not is_prime(91)


def test_circulant_and_power_of_cycle():
    # C_n^k is the circulant with distances 1..k
    assert build_power_of_cycle(11, 3) == build_circulant(11, [1, 2, 3])
    G = build_power_of_cycle(10, 2)
    assert G.is_regular() and G.max_degree() == 4
    # distance wrap: n=7, k=3 is complete
    assert build_power_of_cycle(7, 3) == complete(7)


def test_unitary_cayley():
    # X_p is complete for prime p
    assert build_unitary_cayley(7) == complete(7)
    # X_n is phi(n)-regular
    for n in [4, 8, 9, 12, 15, 16]:
        G = build_unitary_cayley(n)
        assert G.is_regular() and G.max_degree() == euler_phi(n)
    # even n: bipartite by parity, no edge between same-parity residues
    G = build_unitary_cayley(12)
    for (u, v) in G.edges:
        assert (u + v) % 2 == 1


def test_kneser_and_odd_graph():
    labels = kneser_vertex_labels(5, 2)
    assert len(labels) == 10 and labels[0] == (0, 1)
    petersen = build_kneser(5, 2)
    assert petersen.n == 10 and petersen.m == 15 and petersen.max_degree() == 3
    assert build_odd_graph(3) == petersen
    O4 = build_odd_graph(4)
    assert O4.n == 35 and O4.is_regular() and O4.max_degree() == 4


def test_mock_threshold_build():
    steps = (MockThresholdStep("isolated", None),
             MockThresholdStep("dominant", None),
             MockThresholdStep("pendant", 1),
             MockThresholdStep("codominant", 0))
    script = MockThresholdScript(steps, (0, 1, 2, 3))
    G = build_mock_threshold(script)
    assert G.has_edge(0, 1) and G.has_edge(1, 2)
    # codominant joins every earlier vertex except the referenced one
    assert G.neighbors(3) == {1, 2}
    assert not G.has_edge(0, 3)


def test_mock_threshold_recognition_roundtrip():
    steps = tuple(MockThresholdStep(k, r) for k, r in
                  [("isolated", None), ("dominant", None), ("pendant", 0),
                   ("dominant", None), ("codominant", 2), ("pendant", 4)])
    script = MockThresholdScript(steps, tuple(range(6)))
    G = build_mock_threshold(script)
    rec = recognize_mock_threshold(G)
    assert rec is not None
    G2 = build_mock_threshold(rec)
    perm = {i: rec.order[i] for i in range(G.n)}
    relabeled = frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in G2.edges)
    assert relabeled == G.edges


def test_recognition_rejects_non_mock_threshold():
    # C5 has no removable vertex of any of the four kinds
    assert recognize_mock_threshold(build_circulant(5, [1])) is None


def test_group_table_checks():
    table = cyclic_group_table(6)
    assert check_group_table(table) == 0
    assert group_inverse(table, 2) == 4
    assert order_two_element(table) == 3
    bad = [[0, 1], [1, 1]]
    with pytest.raises(ValueError):
        check_group_table(bad)


def test_cayley_from_table():
    table = cyclic_group_table(10)
    G = build_cayley_from_table(table, {1, 9})
    assert G == build_circulant(10, [1])
    with pytest.raises(ValueError):
        build_cayley_from_table(table, {1})  # not inverse-closed
