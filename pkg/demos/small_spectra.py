"""Spectra of the five smallest interesting graphs."""

from mixedrandic import cycle_graph, directed_cycle, path_graph, randic_spectrum

cases = [
    ("single edge", path_graph(2)),
    ("triangle", cycle_graph(3)),
    ("all-arc triangle", directed_cycle(3)),
    ("path on 3", path_graph(3)),
    ("square", cycle_graph(4)),
]

for name, g in cases:
    s = randic_spectrum(g)
    values = "  ".join(f"{v:+.6f}" for v in s.eigenvalues)
    print(f"{name:18s} [{values}]  energy={s.energy:.6f}")
