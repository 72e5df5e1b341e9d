from fractions import Fraction

import pytest

from mixedrandic import (
    MixedGraph,
    cycle_graph,
    directed_cycle,
    enumerate_cycles,
    enumerate_elementary_subgraphs,
    enumerate_mixed_graphs,
    path_graph,
    sample_mixed_graphs,
    spanning_elementary_subgraphs,
)


def complete_graph(n):
    return MixedGraph.build(n, undirected_pairs=[(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])


def test_cycles_of_triangle_and_tree():
    assert enumerate_cycles(cycle_graph(3)) == [(1, 2, 3)]
    assert enumerate_cycles(path_graph(4)) == []


def test_cycles_of_k4():
    cycles = enumerate_cycles(complete_graph(4))
    assert len(cycles) == 7
    assert sum(1 for c in cycles if len(c) == 3) == 4
    assert sum(1 for c in cycles if len(c) == 4) == 3
    # canonical form: smallest vertex first, then the smaller neighbor
    for c in cycles:
        assert c[0] == min(c)
        assert c[1] < c[-1]


def test_elementary_subgraphs_of_triangle():
    spanning = enumerate_elementary_subgraphs(cycle_graph(3), 3)
    assert len(spanning) == 1  # three vertices cannot be covered by disjoint edges
    assert spanning[0].s == 1
    order2 = enumerate_elementary_subgraphs(cycle_graph(3), 2)
    assert len(order2) == 3
    for sub in order2:
        assert sub.c == 1 and sub.r == 1 and sub.s == 0
        assert sub.q == Fraction(1, 4)  # host degrees are 2 and 2


def test_no_spanning_elementary_subgraph_of_p3():
    assert enumerate_elementary_subgraphs(path_graph(3), 3) == []


def test_counter_invariants_exhaustive(exhaustive_population):
    for g in exhaustive_population:
        for k in range(g.n + 1):
            for sub in enumerate_elementary_subgraphs(g, k):
                assert sub.l_pos + sub.l_neg + sub.l_semi_pos + sub.l_semi_neg == sub.s
                assert sub.r == sub.order - sub.c
                degrees = g.degrees()
                covered = [v for comp in sub.cycles for v in comp]
                covered += [v for e in sub.edges for v in (e.u, e.v)]
                q = Fraction(1)
                for v in covered:
                    q /= degrees[v - 1]
                assert q == sub.q


def test_single_edge_weight():
    sub, = spanning_elementary_subgraphs(path_graph(2))
    assert sub.signed_weight() == Fraction(-1)


@pytest.mark.parametrize(
    "g,weight",
    [
        (cycle_graph(3), Fraction(1, 4)),        # all-ones cycle counts double, even sign
        (directed_cycle(3), Fraction(-1, 4)),    # gain -1 flips the sign
        (MixedGraph.build(3, undirected_pairs=[(2, 3), (1, 3)], arcs=[(1, 2)]), Fraction(1, 8)),
    ],
)
def test_spanning_cycle_weights(g, weight):
    sub, = spanning_elementary_subgraphs(g)
    assert sub.signed_weight() == weight


def test_enumerate_counts():
    assert len(list(enumerate_mixed_graphs(1))) == 1
    assert len(list(enumerate_mixed_graphs(2, connected_only=True))) == 3
    assert len(list(enumerate_mixed_graphs(3))) == 64  # 4 ** 3 pair states
    assert len(list(enumerate_mixed_graphs(3, connected_only=True, min_degree=1))) == 54


def test_enumerate_n4_counts():
    connected = sum(1 for _ in enumerate_mixed_graphs(4, connected_only=True, min_degree=1))
    # underlying graphs by edge count: 16 trees * 27, 15 unicyclic * 81,
    # 6 five-edge * 243, 1 complete * 729
    assert connected == 16 * 27 + 15 * 81 + 6 * 243 + 729 == 3834
    min_degree_only = sum(1 for _ in enumerate_mixed_graphs(4, min_degree=1))
    # the disconnected survivors are the 3 perfect matchings in 3 * 3 orientations
    assert min_degree_only - connected == 27


def test_enumerate_cap():
    with pytest.raises(ValueError):
        list(enumerate_mixed_graphs(7))


def test_enumeration_order_is_deterministic():
    first = list(enumerate_mixed_graphs(3))
    second = list(enumerate_mixed_graphs(3))
    assert first == second


def test_spanning_matches_full_order():
    g = complete_graph(4)
    assert spanning_elementary_subgraphs(g) == enumerate_elementary_subgraphs(g, 4)


def test_sampling_determinism():
    a = sample_mixed_graphs(5, 40, seed=11)
    b = sample_mixed_graphs(5, 40, seed=11)
    c = sample_mixed_graphs(5, 40, seed=12)
    assert a == b
    assert a != c
    assert len(a) == 40
    for g in a:
        assert g.n == 5
        assert g.is_connected()
        assert min(g.degrees()) >= 1
