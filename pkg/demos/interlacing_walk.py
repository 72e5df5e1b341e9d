"""Edge deletion interlacing on a five-cycle with one arc."""

from mixedrandic import MixedGraph, interlacing_check

g = MixedGraph.build(5, undirected_pairs=[(1, 2), (2, 3), (3, 4), (4, 5)], arcs=[(5, 1)])

fmt = lambda s: " ".join(f"{v:+.4f}" for v in s.eigenvalues)
for e in g.edges:
    result = interlacing_check(g, (e.u, e.v))
    print(f"delete {e.u}{e.kind.value}{e.v}")
    print("  original:", fmt(result.original))
    print("  reduced: ", fmt(result.reduced))
    print("  holds:   ", result.holds)
