"""Which energy bounds are sharp, and where.

The un-oriented triangle meets its geometric-mean, minimal-modulus, and
ratio-based lower estimates exactly; the single edge meets the determinant
and second-moment pair plus the two remaining lower estimates.
"""

from mixedrandic import cycle_graph, energy_bounds_report, path_graph

for name, g in (("triangle", cycle_graph(3)), ("single edge", path_graph(2))):
    report = energy_bounds_report(g)
    print(f"{name}: energy = {report.energy:.12f}")
    for record in report.records:
        if record.skipped:
            print(f"  {record.name:28s} skipped ({record.reason})")
            continue
        tag = "TIGHT" if abs(record.slack) <= 1e-9 else f"slack {record.slack:+.6f}"
        print(f"  {record.name:28s} {tag}")
    print()
