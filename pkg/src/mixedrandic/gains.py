"""Unit-complex gains on mixed graphs and switching equivalence.

A mixed graph induces a gain on every oriented edge of its underlying graph:
1 on an un-oriented edge, ``omega = (1 + i*sqrt(3))/2`` along an arc and its
conjugate against it.  Since omega is a primitive sixth root of unity, every
gain and every cycle gain of such a view is a sixth root of unity; those are
kept symbolically (an exponent mod 6) so that cycle classification and
switching certificates never touch floating point.

Switching by a vertex function zeta maps the gain g(i, j) to
``zeta(i)**-1 * g(i, j) * zeta(j)``; it preserves every cycle gain and the
spectrum of the associated matrices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Mapping

from .graphs import EdgeKind, MixedGraph

OMEGA = complex(0.5, math.sqrt(3.0) / 2.0)
OMEGA_BAR = OMEGA.conjugate()

_ROOT_TOL = 1e-9


@dataclass(frozen=True)
class SixthRoot:
    """omega**k with the exponent kept mod 6; exact under *, / and conjugation."""

    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % 6)

    def __mul__(self, other: "SixthRoot") -> "SixthRoot":
        return SixthRoot(self.k + other.k)

    def inverse(self) -> "SixthRoot":
        return SixthRoot(-self.k)

    def conjugate(self) -> "SixthRoot":
        return SixthRoot(-self.k)

    def __neg__(self) -> "SixthRoot":
        return SixthRoot(self.k + 3)

    @property
    def value(self) -> complex:
        return cmath.exp(1j * math.pi * self.k / 3.0)

    def __str__(self) -> str:
        names = {0: "1", 1: "w", 2: "-w̄", 3: "-1", 4: "-w", 5: "w̄"}
        return names[self.k]


ONE = SixthRoot(0)
W = SixthRoot(1)          # omega itself
W_BAR = SixthRoot(5)
MINUS_ONE = SixthRoot(3)

Gain = SixthRoot | complex


def _as_complex(g: Gain) -> complex:
    return g.value if isinstance(g, SixthRoot) else complex(g)


def _mul(a: Gain, b: Gain) -> Gain:
    if isinstance(a, SixthRoot) and isinstance(b, SixthRoot):
        return a * b
    return _as_complex(a) * _as_complex(b)


def _inv(a: Gain) -> Gain:
    if isinstance(a, SixthRoot):
        return a.inverse()
    return 1.0 / complex(a)


def nearest_sixth_root(z: complex, tol: float = _ROOT_TOL) -> SixthRoot | None:
    """The sixth root of unity within tol of z, or None."""
    for k in range(6):
        if abs(z - SixthRoot(k).value) <= tol:
            return SixthRoot(k)
    return None


class CycleClass(Enum):
    """Cycle classification by gain: 1, -1, {w, w-bar}, {-w, -w-bar}."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    SEMI_POSITIVE = "semi-positive"
    SEMI_NEGATIVE = "semi-negative"


_CLASS_BY_EXPONENT = {
    0: CycleClass.POSITIVE,
    1: CycleClass.SEMI_POSITIVE,
    2: CycleClass.SEMI_NEGATIVE,
    3: CycleClass.NEGATIVE,
    4: CycleClass.SEMI_NEGATIVE,
    5: CycleClass.SEMI_POSITIVE,
}


@dataclass(frozen=True)
class GainView:
    """Gains on every oriented edge of a graph's underlying graph.

    ``gains`` maps each ordered adjacent pair (i, j) to the gain of the
    traversal i -> j; the reverse direction always holds the inverse.
    """

    base: MixedGraph
    gains: Mapping[tuple[int, int], Gain]

    def gain(self, i: int, j: int) -> Gain:
        try:
            return self.gains[(i, j)]
        except KeyError:
            raise ValueError(f"no edge between {i} and {j}") from None

    @property
    def is_exact(self) -> bool:
        return all(isinstance(g, SixthRoot) for g in self.gains.values())


def gain_view(g: MixedGraph) -> GainView:
    """The sixth-root gain view of a mixed graph.

    Un-oriented edges carry gain 1; an arc u -> v carries omega along the
    arc and its conjugate against it.
    """
    gains: dict[tuple[int, int], Gain] = {}
    for e in g.edges:
        if e.kind is EdgeKind.UNDIRECTED:
            gains[(e.u, e.v)] = ONE
            gains[(e.v, e.u)] = ONE
        else:
            gains[(e.u, e.v)] = W
            gains[(e.v, e.u)] = W_BAR
    return GainView(g, gains)


def _check_cycle(view: GainView, cycle: tuple[int, ...]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise ValueError(f"{cycle} is not a simple cycle")
    closed = list(cycle) + [cycle[0]]
    for a, b in zip(closed, closed[1:]):
        if (a, b) not in view.gains:
            raise ValueError(f"{cycle} is not a cycle: {a} and {b} not adjacent")


def cycle_gain(view: GainView, cycle: tuple[int, ...]) -> Gain:
    """Product of gains along the cycle in the order given.

    Reversing the traversal direction conjugates the result.
    """
    _check_cycle(view, cycle)
    closed = list(cycle) + [cycle[0]]
    out: Gain = ONE
    for a, b in zip(closed, closed[1:]):
        out = _mul(out, view.gains[(a, b)])
    return out


def classify_cycle(view: GainView, cycle: tuple[int, ...]) -> CycleClass:
    """Classify a cycle by its gain; independent of traversal direction.

    Gains that are not sixth roots of unity (possible only for hand-built
    views) are rejected rather than forced into a class.
    """
    g = cycle_gain(view, cycle)
    if not isinstance(g, SixthRoot):
        root = nearest_sixth_root(g)
        if root is None:
            raise ValueError(f"cycle gain {g} is not a sixth root of unity; unclassified")
        g = root
    return _CLASS_BY_EXPONENT[g.k]


def _propagate(view: GainView) -> tuple[dict[int, Gain], bool]:
    """BFS potentials with theta(root) = 1 and g(i, j) = theta(i)/theta(j).

    Returns (theta, consistent): consistent is False when some non-tree edge
    contradicts the propagated potentials, i.e. some cycle has gain != 1.
    """
    g = view.base
    adj = g.adjacency_sets()
    theta: dict[int, Gain] = {}
    consistent = True
    for start in g.vertices():
        if start in theta:
            continue
        theta[start] = ONE
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in theta:
                    # g(v, w) = theta(v)/theta(w)  =>  theta(w) = theta(v)/g(v, w)
                    theta[w] = _mul(theta[v], _inv(view.gains[(v, w)]))
                    queue.append(w)
    for (i, j), gij in view.gains.items():
        expected = _mul(theta[i], _inv(theta[j]))
        if isinstance(gij, SixthRoot) and isinstance(expected, SixthRoot):
            if gij != expected:
                consistent = False
        elif abs(_as_complex(gij) - _as_complex(expected)) > _ROOT_TOL:
            consistent = False
    return theta, consistent


def view_is_positive(view: GainView) -> bool:
    """True iff every cycle of the view has gain 1 (acyclic views qualify)."""
    return _propagate(view)[1]


def is_positive(g: MixedGraph) -> bool:
    """True iff every cycle of the mixed graph has gain 1.

    Tree-propagation: potentials are pushed over a spanning forest and every
    co-tree edge must close a gain-1 cycle.
    """
    return view_is_positive(gain_view(g))


def is_positive_by_paths(g: MixedGraph) -> bool:
    """Brute-force positivity oracle: between any two vertices, every simple
    path carries the same gain.

    Gains (the unit-modulus entries of the adjacency matrix) are compared;
    the degree factors of walk values are path-dependent and would differ
    even in a positive graph.  Exponential in the graph size; desk scale.
    """
    view = gain_view(g)
    adj = g.adjacency_sets()

    def path_gains(s: int, t: int) -> set[int]:
        found: set[int] = set()

        def extend(v: int, seen: set[int], acc: SixthRoot) -> None:
            if v == t:
                found.add(acc.k)
                return
            for w in sorted(adj[v]):
                if w not in seen:
                    step = view.gains[(v, w)]
                    assert isinstance(step, SixthRoot)
                    extend(w, seen | {w}, acc * step)

        extend(s, {s}, ONE)
        return found

    for s, t in combinations(g.vertices(), 2):
        if len(path_gains(s, t)) > 1:
            return False
    return True


def apply_switching(view: GainView, zeta: Mapping[int, Gain]) -> GainView:
    """Switch a gain view: g(i, j) becomes zeta(i)**-1 * g(i, j) * zeta(j).

    Cycle gains are preserved.  The result stays exact when both the view
    and zeta are sixth-root valued.
    """
    missing = [v for v in view.base.vertices() if v not in zeta]
    if missing:
        raise ValueError(f"switching function undefined on vertices {missing}")
    new_gains = {
        (i, j): _mul(_inv(zeta[i]), _mul(g, zeta[j]))
        for (i, j), g in view.gains.items()
    }
    return GainView(view.base, new_gains)


def switching_certificate_to_constant(
    view: GainView, target: Gain | int
) -> dict[int, Gain] | None:
    """A switching function taking every gain to the constant target, if any.

    target must be 1 or -1.  The certificate is gauged with zeta(1) = 1 and
    built by BFS propagation; existence for target 1 means every cycle gain
    is 1, and for target -1 that every cycle gain is (-1)**length.  Requires
    a connected underlying graph.
    """
    if target in (1, -1):
        target = ONE if target == 1 else MINUS_ONE
    if not isinstance(target, SixthRoot) or target.k not in (0, 3):
        raise ValueError("target gain must be 1 or -1")
    g = view.base
    if not g.is_connected():
        raise ValueError("switching certificates require a connected graph")
    adj = g.adjacency_sets()
    zeta: dict[int, Gain] = {1: ONE}
    queue = [1]
    while queue:
        v = queue.pop()
        for w in adj[v]:
            if w not in zeta:
                # want zeta(v)**-1 g(v, w) zeta(w) = target
                zeta[w] = _mul(target, _mul(zeta[v], _inv(view.gains[(v, w)])))
                queue.append(w)
    switched = apply_switching(view, zeta)
    for gain in switched.gains.values():
        if isinstance(gain, SixthRoot):
            if gain != target:
                return None
        elif abs(_as_complex(gain) - target.value) > _ROOT_TOL:
            return None
    return zeta


def are_switching_equivalent(v1: GainView, v2: GainView) -> bool:
    """Whether some switching function maps v1 to v2.

    Both views must live on the same connected underlying graph.  Decided on
    the quotient gain v1 * v2**-1, which is switchable to all-ones exactly
    when the two views agree on every cycle gain.
    """
    g1, g2 = v1.base, v2.base
    if g1.n != g2.n or set(g1.underlying_pairs()) != set(g2.underlying_pairs()):
        raise ValueError("views live on different underlying graphs")
    quotient = GainView(
        g1,
        {key: _mul(v1.gains[key], _inv(v2.gains[key])) for key in v1.gains},
    )
    return switching_certificate_to_constant(quotient, ONE) is not None
