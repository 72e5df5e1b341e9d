import random

import pytest

from mixedrandic import (
    CycleClass,
    MixedGraph,
    apply_switching,
    are_switching_equivalent,
    classify_cycle,
    cycle_gain,
    cycle_graph,
    directed_cycle,
    enumerate_cycles,
    gain_view,
    is_positive,
    path_graph,
    population,
    switching_certificate_to_constant,
)
from mixedrandic.gains import (
    MINUS_ONE,
    ONE,
    W,
    W_BAR,
    SixthRoot,
    is_positive_by_paths,
    nearest_sixth_root,
)

ROOTS = [SixthRoot(k) for k in range(6)]


def single_arc_triangle():
    return MixedGraph.build(3, undirected_pairs=[(2, 3), (1, 3)], arcs=[(1, 2)])


def test_gain_values_per_edge_kind():
    v = gain_view(MixedGraph.build(2, undirected_pairs=[(1, 2)]))
    assert v.gain(1, 2) == ONE == v.gain(2, 1)
    v = gain_view(MixedGraph.build(2, arcs=[(1, 2)]))
    assert v.gain(1, 2) == W
    assert v.gain(2, 1) == W_BAR
    v = gain_view(directed_cycle(3))
    assert v.gain(1, 2) == v.gain(2, 3) == v.gain(3, 1) == W


def test_sixth_root_arithmetic():
    assert W * W_BAR == ONE
    assert W * W * W == MINUS_ONE
    assert W.conjugate() == W_BAR == W.inverse()
    assert MINUS_ONE * MINUS_ONE == ONE
    assert abs(W.value - (0.5 + 0.8660254037844386j)) < 1e-15
    for root in ROOTS:
        assert abs(root.value * root.conjugate().value - 1) < 1e-15
        assert nearest_sixth_root(root.value) == root


def test_cycle_gain():
    assert cycle_gain(gain_view(directed_cycle(3)), (1, 2, 3)) == MINUS_ONE
    assert cycle_gain(gain_view(cycle_graph(3)), (1, 2, 3)) == ONE
    v = gain_view(single_arc_triangle())
    assert cycle_gain(v, (1, 2, 3)) == W
    # the reversed traversal conjugates
    assert cycle_gain(v, (1, 3, 2)) == W_BAR


def test_cycle_gain_rejects_non_cycles():
    v = gain_view(path_graph(3))
    with pytest.raises(ValueError):
        cycle_gain(v, (1, 2, 3))  # 1 and 3 are not adjacent
    with pytest.raises(ValueError):
        cycle_gain(v, (1, 2))


def test_classify_cycle():
    assert classify_cycle(gain_view(cycle_graph(3)), (1, 2, 3)) == CycleClass.POSITIVE
    assert classify_cycle(gain_view(directed_cycle(3)), (1, 2, 3)) == CycleClass.NEGATIVE
    assert classify_cycle(gain_view(single_arc_triangle()), (1, 2, 3)) == CycleClass.SEMI_POSITIVE
    # four arcs in a row: gain w**4
    assert classify_cycle(gain_view(directed_cycle(4)), (1, 2, 3, 4)) == CycleClass.SEMI_NEGATIVE


def test_positive_graphs():
    assert is_positive(path_graph(4))
    assert is_positive(MixedGraph.build(4, arcs=[(1, 2), (3, 2), (3, 4)]))  # oriented tree
    assert not is_positive(directed_cycle(3))
    assert is_positive(cycle_graph(4))


def test_positive_agrees_with_path_oracle(exhaustive_population):
    for g in exhaustive_population:
        assert is_positive(g) == is_positive_by_paths(g)
    for g in population(5)[:150]:
        assert is_positive(g) == is_positive_by_paths(g)


def test_apply_switching_identity():
    v = gain_view(directed_cycle(3))
    same = apply_switching(v, {k: ONE for k in (1, 2, 3)})
    for u, w in ((1, 2), (2, 3), (3, 1)):
        assert same.gain(u, w) == v.gain(u, w)


def test_apply_switching_formula():
    v = gain_view(MixedGraph.build(2, arcs=[(1, 2)]))
    switched = apply_switching(v, {1: ONE, 2: W_BAR})
    assert switched.gain(1, 2) == ONE


def test_switching_preserves_cycle_gains():
    rng = random.Random(7)
    for g in population(4)[:120]:
        cycles = enumerate_cycles(g)
        if not cycles:
            continue
        v = gain_view(g)
        zeta = {k: rng.choice(ROOTS) for k in g.vertices()}
        switched = apply_switching(v, zeta)
        for cyc in cycles:
            assert cycle_gain(switched, cyc) == cycle_gain(v, cyc)


def test_certificate_to_all_ones():
    cert = switching_certificate_to_constant(gain_view(cycle_graph(3)), ONE)
    assert cert is not None
    assert all(value == ONE for value in cert.values())
    assert switching_certificate_to_constant(gain_view(single_arc_triangle()), ONE) is None


def test_certificate_to_minus_one():
    v = gain_view(directed_cycle(3))
    cert = switching_certificate_to_constant(v, MINUS_ONE)
    assert cert is not None
    switched = apply_switching(v, cert)
    for e in directed_cycle(3).edges:
        assert switched.gain(e.u, e.v) == MINUS_ONE
    assert switching_certificate_to_constant(gain_view(single_arc_triangle()), MINUS_ONE) is None


def test_certificate_requires_connected():
    g = MixedGraph.build(4, undirected_pairs=[(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        switching_certificate_to_constant(gain_view(g), ONE)


def test_switching_equivalence():
    v = gain_view(directed_cycle(3))
    assert are_switching_equivalent(v, v)
    cert = switching_certificate_to_constant(v, MINUS_ONE)
    assert are_switching_equivalent(v, apply_switching(v, cert))
    assert not are_switching_equivalent(gain_view(cycle_graph(3)), v)


def test_switching_equivalence_needs_same_underlying_graph():
    with pytest.raises(ValueError):
        are_switching_equivalent(gain_view(cycle_graph(3)), gain_view(path_graph(3)))
