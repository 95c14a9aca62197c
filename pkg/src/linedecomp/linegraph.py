"""Line graphs with side annotations, transitions, and vertex splitting."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Dart, GraphError, MultiGraph, components


@dataclass(frozen=True)
class LineGraph:
    """Line graph of a simple graph.

    Vertices are the edge ids of ``base``.  Every line edge ``(e, f)`` with
    ``e < f`` is annotated with the base vertex the two edges share, so the
    ``u``-side neighbourhood of a line vertex ``uv`` is the set of its
    neighbours whose annotation is ``u``.
    """

    base: MultiGraph
    edges: tuple[tuple[int, int], ...]
    shared: dict = field(repr=False, compare=False)
    _adj: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = {e: [] for e in self.base.edge_ids}
        for e, f in self.edges:
            adj[e].append(f)
            adj[f].append(e)
        object.__setattr__(self, "_adj", {e: tuple(sorted(ns)) for e, ns in adj.items()})

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.base.edge_ids

    @property
    def num_vertices(self) -> int:
        return self.base.num_edges

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def side(self, e: int, f: int) -> int:
        """Base vertex shared by adjacent line vertices ``e`` and ``f``."""
        try:
            return self.shared[(e, f) if e < f else (f, e)]
        except KeyError:
            raise GraphError(f"{e} and {f} are not adjacent in the line graph") from None

    def adjacent(self, e: int, f: int) -> bool:
        return ((e, f) if e < f else (f, e)) in self.shared

    def neighbors(self, e: int) -> tuple[int, ...]:
        try:
            return self._adj[e]
        except KeyError:
            raise GraphError(f"{e} is not a line graph vertex") from None

    def side_neighbors(self, e: int, u: int) -> list[int]:
        """The ``u``-neighbourhood of line vertex ``e``."""
        return [f for f in self.neighbors(e) if self.side(e, f) == u]

    def degree(self, e: int) -> int:
        return len(self.neighbors(e))

    def edge_key(self, e: int, f: int) -> tuple[int, int]:
        return (e, f) if e < f else (f, e)

    def as_multigraph(self) -> MultiGraph:
        """Plain graph view: vertex ids are base edge ids, edge ids are
        positions in :attr:`edges`."""
        return MultiGraph(
            self.vertices,
            tuple((i, e, f) for i, (e, f) in enumerate(self.edges)),
            f"L({self.base.name})",
        )

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.edges)}

    def without_edges(self, pairs) -> LineGraph:
        """Copy with some line edges deleted (used to build broken fixtures)."""
        drop = {self.edge_key(*p) for p in pairs}
        kept = tuple(p for p in self.edges if p not in drop)
        return LineGraph(self.base, kept, {p: self.shared[p] for p in kept})


def line_graph(X: MultiGraph) -> LineGraph:
    if not X.is_simple():
        raise GraphError("line graph requires simple base")
    shared = {}
    for w in X.vertices:
        for e, f in combinations(sorted(X.edges_at(w)), 2):
            shared[(e, f)] = w
    return LineGraph(X, tuple(sorted(shared)), shared)


@dataclass(frozen=True, order=True)
class Transition:
    vertex: int
    darts: tuple[Dart, Dart]

    def __post_init__(self):
        d1, d2 = self.darts
        if d1 == d2:
            raise GraphError("a transition needs two distinct darts")
        object.__setattr__(self, "darts", (min(d1, d2), max(d1, d2)))

    def __str__(self):
        (e1, x1), (e2, x2) = self.darts
        return f"transition {self.vertex} {e1}/{x1} {e2}/{x2}"


def parse_transition(line: str) -> Transition:
    tokens = line.split()
    if len(tokens) != 4 or tokens[0] != "transition":
        raise ValueError(f"bad transition line {line!r}")
    darts = []
    for tok in tokens[2:]:
        e, _, end = tok.partition("/")
        if end not in ("a", "b"):
            raise ValueError(f"bad dart {tok!r}")
        darts.append((int(e), end))
    return Transition(int(tokens[1]), tuple(darts))


def transitions_at(X: MultiGraph, v: int) -> list[Transition]:
    return [Transition(v, (d1, d2)) for d1, d2 in combinations(X.darts_at(v), 2)]


def all_transitions(X: MultiGraph) -> list[Transition]:
    return [t for v in X.vertices for t in transitions_at(X, v)]


def split_at_transition(X: MultiGraph, t: Transition) -> MultiGraph:
    """The graph ``X^t``.

    Vertex ``t.vertex`` is replaced by ``u1 = max + 1`` carrying the two darts
    of ``t`` and ``u2 = max + 2`` carrying the others.  When ``t`` uses every
    dart at the vertex, ``u2`` would be isolated and is not created.
    """
    u = t.vertex
    darts = X.darts_at(u)
    if any(d not in darts for d in t.darts):
        raise GraphError(f"{t} is not a transition of the graph")
    top = max(X.vertices)
    u1, u2 = top + 1, top + 2
    new_vertex = {d: (u1 if d in t.darts else u2) for d in darts}
    edges = []
    for e, a, b in X.edges:
        if a == u:
            a = new_vertex[(e, "a")]
        if b == u:
            b = new_vertex[(e, "b")]
        edges.append((e, a, b))
    vertices = [v for v in X.vertices if v != u] + [u1]
    if len(darts) > 2:
        vertices.append(u2)
    return MultiGraph(tuple(vertices), tuple(edges), X.name)


def separating_transitions(X: MultiGraph) -> list[Transition]:
    base = len(components(X))
    return [t for t in all_transitions(X) if len(components(split_at_transition(X, t))) > base]
