"""Switching the all-arc triangle to the constant gain -1.

Every forward arc carries gain w with w^3 = -1, so the cycle gain is -1 and
a vertex switching function can push every single edge to -1.  The cycle
gain itself never moves.
"""

from mixedrandic import (
    apply_switching,
    classify_cycle,
    cycle_gain,
    directed_cycle,
    gain_view,
    switching_certificate_to_constant,
)
from mixedrandic.gains import MINUS_ONE

g = directed_cycle(3)
view = gain_view(g)
print("cycle gain:", cycle_gain(view, (1, 2, 3)))
print("cycle class:", classify_cycle(view, (1, 2, 3)).name)

zeta = switching_certificate_to_constant(view, MINUS_ONE)
print("switching function:", {v: str(z) for v, z in sorted(zeta.items())})

switched = apply_switching(view, zeta)
for e in g.edges:
    print(f"gain({e.u},{e.v}) after switching:", switched.gain(e.u, e.v))
print("cycle gain after switching:", cycle_gain(switched, (1, 2, 3)))
