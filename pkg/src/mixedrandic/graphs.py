"""Mixed graphs: edges that are either un-oriented or one-directional arcs.

A mixed graph on vertices 1..n holds at most one relation per vertex pair:
an un-oriented edge ``u -- v`` or an arc ``u -> v``.  The *underlying graph*
forgets all orientations; degrees, connectivity and bipartiteness are always
taken there.

Graphs are read and written in the ``mixedgraph v1`` text format::

    mixedgraph v1
    vertices 4
    1 -- 2      # un-oriented edge
    2 -> 3      # arc from 2 to 3
    3 -- 4

``#`` starts a comment, blank lines are ignored, LF and CRLF are both
accepted (LF is emitted).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable


class ParseError(ValueError):
    """Raised on malformed mixedgraph v1 input; the message names the line."""


class EdgeKind(Enum):
    UNDIRECTED = "--"
    ARC = "->"


@dataclass(frozen=True)
class EdgeRecord:
    """One edge of a mixed graph.

    For ``UNDIRECTED`` the endpoints are stored with ``u < v``; for ``ARC``
    the edge is oriented ``u -> v``.
    """

    u: int
    v: int
    kind: EdgeKind

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop at vertex {self.u}")
        if self.kind is EdgeKind.UNDIRECTED and self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    @property
    def pair(self) -> tuple[int, int]:
        """The unordered endpoint pair, smaller label first."""
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def __str__(self) -> str:
        return f"{self.u} {self.kind.value} {self.v}"


def undirected(u: int, v: int) -> EdgeRecord:
    return EdgeRecord(u, v, EdgeKind.UNDIRECTED)


def arc(u: int, v: int) -> EdgeRecord:
    """An oriented edge from u to v."""
    return EdgeRecord(u, v, EdgeKind.ARC)


@dataclass(frozen=True, eq=False)
class MixedGraph:
    """Immutable mixed graph on vertices 1..n.

    ``edges`` keeps construction order (matrix builders index edge columns by
    it); equality and hashing ignore the order.
    """

    n: int
    edges: tuple[EdgeRecord, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        object.__setattr__(self, "edges", tuple(self.edges))
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            if not (1 <= e.u <= self.n and 1 <= e.v <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            if e.pair in seen:
                raise ValueError(f"duplicate pair {{{e.pair[0]}, {e.pair[1]}}}")
            seen.add(e.pair)

    @classmethod
    def build(
        cls,
        n: int,
        undirected_pairs: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
    ) -> "MixedGraph":
        """Convenience constructor from endpoint pairs."""
        records = [undirected(u, v) for u, v in undirected_pairs]
        records += [arc(u, v) for u, v in arcs]
        return cls(n, tuple(records))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.n == other.n and frozenset(self.edges) == frozenset(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    @property
    def m(self) -> int:
        """Number of edges (of either kind)."""
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def underlying_pairs(self) -> list[tuple[int, int]]:
        """Edges of the underlying graph as sorted (u, v) pairs, u < v."""
        return [e.pair for e in self.edges]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in the underlying graph, ascending."""
        out = [e.u if e.v == v else e.v for e in self.edges if v in (e.u, e.v)]
        return sorted(out)

    def adjacency_sets(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        return adj

    def has_pair(self, u: int, v: int) -> bool:
        """True if the underlying graph joins u and v."""
        pair = (u, v) if u < v else (v, u)
        return any(e.pair == pair for e in self.edges)

    def edge_between(self, u: int, v: int) -> EdgeRecord | None:
        pair = (u, v) if u < v else (v, u)
        for e in self.edges:
            if e.pair == pair:
                return e
        return None

    def degrees(self) -> tuple[int, ...]:
        """Underlying-graph degree of each vertex; index i holds vertex i+1."""
        d = [0] * self.n
        for e in self.edges:
            d[e.u - 1] += 1
            d[e.v - 1] += 1
        return tuple(d)

    def degree(self, v: int) -> int:
        return self.degrees()[v - 1]

    def without_edge(self, e: EdgeRecord) -> "MixedGraph":
        """A copy with the given edge removed (other edges keep their order)."""
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return MixedGraph(self.n, tuple(x for x in self.edges if x != e))

    def underlying_graph(self) -> "MixedGraph":
        """The same graph with every arc replaced by an un-oriented edge."""
        return MixedGraph(
            self.n, tuple(undirected(e.u, e.v) for e in self.edges)
        )

    def is_connected(self) -> bool:
        """Connectivity of the underlying graph (a single vertex counts)."""
        adj = self.adjacency_sets()
        seen = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def two_coloring(self) -> dict[int, int] | None:
        """A proper 2-coloring of the underlying graph, or None if none exists.

        Colors are 0/1; works per connected component.
        """
        adj = self.adjacency_sets()
        color: dict[int, int] = {}
        for start in self.vertices():
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        """True iff the underlying graph has no odd cycle."""
        return self.two_coloring() is not None


def general_randic_index(g: MixedGraph, alpha: Fraction | int | float):
    """Sum of (d_u * d_v)**alpha over edges of the underlying graph.

    Exact Fraction for integer alpha, float otherwise.  Degrees are taken in
    the underlying graph, so orientations are irrelevant.
    """
    if g.m == 0:
        raise ValueError("Randic index undefined for a graph with no edges")
    d = g.degrees()
    if isinstance(alpha, int) or (isinstance(alpha, Fraction) and alpha.denominator == 1):
        k = int(alpha)
        return sum(
            (Fraction(d[u - 1] * d[v - 1]) ** k for u, v in g.underlying_pairs()),
            Fraction(0),
        )
    return float(sum((d[u - 1] * d[v - 1]) ** float(alpha) for u, v in g.underlying_pairs()))


def parse_graph(text: str) -> MixedGraph:
    """Parse the mixedgraph v1 text format.

    Raises ParseError (with a line number) on a malformed line, duplicate
    pair, self-loop or out-of-range vertex.
    """
    lines = text.replace("\r\n", "\n").split("\n")

    def stripped(i: int) -> str:
        line = lines[i]
        hash_pos = line.find("#")
        if hash_pos >= 0:
            line = line[:hash_pos]
        return line.strip()

    content = [(i + 1, stripped(i)) for i in range(len(lines))]
    content = [(no, line) for no, line in content if line]
    if not content or content[0][1].split() != ["mixedgraph", "v1"]:
        raise ParseError("line 1: expected header 'mixedgraph v1'")
    if len(content) < 2:
        raise ParseError("missing 'vertices <n>' line")
    no, line = content[1]
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != "vertices" or not tokens[1].isdigit():
        raise ParseError(f"line {no}: expected 'vertices <n>'")
    n = int(tokens[1])
    if n < 1:
        raise ParseError(f"line {no}: vertex count must be at least 1")

    records: list[EdgeRecord] = []
    seen: set[tuple[int, int]] = set()
    for no, line in content[2:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] not in ("--", "->"):
            raise ParseError(f"line {no}: expected '<u> -- <v>' or '<u> -> <v>'")
        try:
            u, v = int(tokens[0]), int(tokens[2])
        except ValueError:
            raise ParseError(f"line {no}: vertex labels must be integers") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {no}: vertex out of range 1..{n}")
        if u == v:
            raise ParseError(f"line {no}: self-loop at vertex {u}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise ParseError(f"line {no}: duplicate pair {{{pair[0]}, {pair[1]}}}")
        seen.add(pair)
        kind = EdgeKind.UNDIRECTED if tokens[1] == "--" else EdgeKind.ARC
        records.append(EdgeRecord(u, v, kind))
    return MixedGraph(n, tuple(records))


def serialize_graph(g: MixedGraph) -> str:
    """Emit mixedgraph v1 text (LF line endings); inverse of parse_graph."""
    lines = ["mixedgraph v1", f"vertices {g.n}"]
    lines += [str(e) for e in g.edges]
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> MixedGraph:
    """The un-oriented path 1 -- 2 -- ... -- n."""
    return MixedGraph.build(n, undirected_pairs=[(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> MixedGraph:
    """The un-oriented cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return MixedGraph.build(n, undirected_pairs=pairs)


def directed_cycle(n: int) -> MixedGraph:
    """The cycle 1 -> 2 -> ... -> n -> 1 with every edge an arc."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    arcs = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return MixedGraph.build(n, arcs=arcs)
