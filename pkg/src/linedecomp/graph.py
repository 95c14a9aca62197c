"""Dart-based undirected multigraphs.

A :class:`MultiGraph` is an immutable value: an ordered tuple of vertex ids and
an ordered tuple of ``(edge_id, a, b)`` triples.  Each edge has two darts
(half edges), ``(edge_id, "a")`` and ``(edge_id, "b")``.  Parallel edges are
allowed, loops are not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Dart = tuple[int, str]
Edge = tuple[int, int, int]

ENDS = ("a", "b")


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph queries."""


class FormatError(ValueError):
    """Raised by the strict text parsers; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    name: str = "G"
    _ends: dict = field(default=None, init=False, repr=False, compare=False)
    _incident: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple((int(e), int(a), int(b)) for e, a, b in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        vset = set(vertices)
        if len(vset) != len(vertices):
            raise GraphError("duplicate vertex id")
        if any(v < 0 for v in vertices):
            raise GraphError("vertex ids must be non-negative")
        ends: dict[int, tuple[int, int]] = {}
        incident: dict[int, list[Dart]] = {v: [] for v in vertices}
        for e, a, b in edges:
            if e < 0:
                raise GraphError("edge ids must be non-negative")
            if e in ends:
                raise GraphError(f"duplicate edge id {e}")
            if a == b:
                raise GraphError(f"edge {e} is a loop")
            if a not in vset or b not in vset:
                raise GraphError(f"edge {e} has an endpoint outside the vertex set")
            ends[e] = (a, b)
            incident[a].append((e, "a"))
            incident[b].append((e, "b"))
        object.__setattr__(self, "_ends", ends)
        object.__setattr__(
            self, "_incident", {v: tuple(sorted(ds)) for v, ds in incident.items()}
        )

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[tuple[int, int]], name: str = "G"):
        """Graph on vertices ``0..n-1`` with edge ids assigned ``0, 1, ...`` in order."""
        return cls(tuple(range(n)), tuple((i, a, b) for i, (a, b) in enumerate(pairs)), name)

    # -- queries ---------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for e, _, _ in self.edges)

    def has_edge(self, e: int) -> bool:
        return e in self._ends

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._ends[e]
        except KeyError:
            raise GraphError(f"no edge with id {e}") from None

    def dart_vertex(self, dart: Dart) -> int:
        e, end = dart
        a, b = self.endpoints(e)
        return a if end == "a" else b

    def dart_at(self, e: int, v: int) -> Dart:
        """The dart of edge ``e`` at its endpoint ``v``."""
        a, b = self.endpoints(e)
        if v == a:
            return (e, "a")
        if v == b:
            return (e, "b")
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    def darts_at(self, v: int) -> tuple[Dart, ...]:
        try:
            return self._incident[v]
        except KeyError:
            raise GraphError(f"no vertex {v}") from None

    def edges_at(self, v: int) -> tuple[int, ...]:
        return tuple(e for e, _ in self.darts_at(v))

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` with multiplicity, in dart order."""
        return [self.other_end(e, v) for e, _ in self.darts_at(v)]

    def is_simple(self) -> bool:
        seen = set()
        for _, a, b in self.edges:
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self) -> int | None:
        """Common degree of all vertices, or ``None`` if degrees differ."""
        degrees = {self.degree(v) for v in self.vertices}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def min_degree(self) -> int:
        return min(self.degree(v) for v in self.vertices)

    def edge_between(self, u: int, v: int) -> int | None:
        """Smallest id of an edge joining ``u`` and ``v``."""
        for e in self.edges_at(u):
            if self.other_end(e, u) == v:
                return e
        return None

    # -- derived graphs --------------------------------------------------

    def without_edges(self, removed: Iterable[int]) -> MultiGraph:
        removed = set(removed)
        return MultiGraph(self.vertices, tuple(x for x in self.edges if x[0] not in removed), self.name)

    def without_vertices(self, removed: Iterable[int]) -> MultiGraph:
        removed = set(removed)
        return MultiGraph(
            tuple(v for v in self.vertices if v not in removed),
            tuple(x for x in self.edges if x[1] not in removed and x[2] not in removed),
            self.name,
        )

    def relabeled(self, vertex_map: dict[int, int], edge_offset: int = 0, name: str | None = None) -> MultiGraph:
        return MultiGraph(
            tuple(vertex_map[v] for v in self.vertices),
            tuple((e + edge_offset, vertex_map[a], vertex_map[b]) for e, a, b in self.edges),
            self.name if name is None else name,
        )

    def renamed(self, name: str) -> MultiGraph:
        return MultiGraph(self.vertices, self.edges, name)

    def iter_darts(self) -> Iterator[Dart]:
        for e, _, _ in self.edges:
            yield (e, "a")
            yield (e, "b")


def components(G: MultiGraph) -> list[frozenset[int]]:
    """Connected components, each block listed in order of its smallest vertex."""
    seen: set[int] = set()
    blocks = []
    for s in sorted(G.vertices):
        if s in seen:
            continue
        seen.add(s)
        block = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    block.append(y)
                    queue.append(y)
        blocks.append(frozenset(block))
    return blocks


def is_connected(G: MultiGraph) -> bool:
    return len(components(G)) <= 1


def degree(G: MultiGraph, v: int) -> int:
    return G.degree(v)


def is_simple(G: MultiGraph) -> bool:
    return G.is_simple()


def is_regular(G: MultiGraph) -> int | None:
    return G.is_regular()


# -- edge connectivity ----------------------------------------------------


def _max_flow_cut(G: MultiGraph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Unit-capacity max flow between ``s`` and ``t``; each undirected edge
    carries one unit in either direction.  Returns the flow value and the
    edges leaving the residual-reachable side of ``s``.
    """
    # flow[e] in {-1, 0, 1}: +1 means a -> b
    flow = {e: 0 for e in G.edge_ids}
    value = 0
    while True:
        parent: dict[int, tuple[int, int] | None] = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for e, end in G.darts_at(x):
                y = G.other_end(e, x)
                if y in parent:
                    continue
                forward = 1 if end == "a" else -1
                if flow[e] != forward:
                    parent[y] = (e, x)
                    queue.append(y)
        if t not in parent:
            cut = frozenset(
                e for e, a, b in G.edges if (a in parent) != (b in parent)
            )
            return value, cut
        y = t
        while parent[y] is not None:
            e, x = parent[y]
            a, _ = G.endpoints(e)
            flow[e] += 1 if x == a else -1
            y = x
        value += 1


def min_edge_cut(G: MultiGraph) -> tuple[int, frozenset[int]]:
    """Minimum edge cut of a connected graph with at least two vertices.

    Runs one max-flow from the smallest vertex to every other vertex.  Among
    the resulting minimum cuts the one with the lexicographically smallest
    sorted edge-id sequence is returned.
    """
    if G.num_vertices < 2:
        raise GraphError("trivial")
    if not is_connected(G):
        raise GraphError("disconnected")
    s = min(G.vertices)
    best = None
    for t in sorted(G.vertices):
        if t == s:
            continue
        value, cut = _max_flow_cut(G, s, t)
        key = (value, sorted(cut))
        if best is None or key < best:
            best = key
    return best[0], frozenset(best[1])


def is_edge_cut(G: MultiGraph, edge_ids: Iterable[int]) -> bool:
    """True iff every id names an edge of ``G`` and deleting them disconnects it."""
    edge_ids = list(edge_ids)
    if not all(G.has_edge(e) for e in edge_ids):
        return False
    return len(components(G.without_edges(edge_ids))) > len(components(G))


# -- text format ------------------------------------------------------------


def dumps(G: MultiGraph) -> str:
    n = G.num_vertices
    if G.vertices != tuple(range(n)):
        raise GraphError("serialization needs vertices 0..n-1 in order")
    if not G.name or any(c.isspace() for c in G.name):
        raise GraphError(f"graph name {G.name!r} is empty or contains whitespace")
    lines = [f"graph {G.name} {n} {G.num_edges}"]
    lines += [f"edge {e} {a} {b}" for e, a, b in G.edges]
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"{what} {token!r} is not an integer", lineno) from None
    if value < 0 or token.strip() != str(value):
        raise FormatError(f"{what} {token!r} is not a non-negative integer", lineno)
    return value


def parse_graph_lines(
    lines: list[str], extra_keywords: Iterable[str] = ()
) -> tuple[MultiGraph, list[tuple[int, list[str]]]]:
    """Strict parser for the graph block of a text file.

    Lines whose first token is in ``extra_keywords`` are returned untouched
    (with 1-based line numbers) for the caller to interpret; any other
    unknown keyword is an error.  Blank lines are not allowed.
    """
    extra_keywords = set(extra_keywords)
    if not lines:
        raise FormatError("empty input", 1)
    header = lines[0].split(" ")
    if len(header) != 4 or header[0] != "graph":
        raise FormatError("expected 'graph <name> <num-vertices> <num-edges>'", 1)
    name = header[1]
    if not name:
        raise FormatError("empty graph name", 1)
    n = _int(header[2], 1, "vertex count")
    m = _int(header[3], 1, "edge count")
    edges = []
    seen = set()
    extras = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if tokens[0] == "edge":
            if len(tokens) != 4:
                raise FormatError("expected 'edge <edge-id> <u> <v>'", lineno)
            e = _int(tokens[1], lineno, "edge id")
            u = _int(tokens[2], lineno, "vertex")
            v = _int(tokens[3], lineno, "vertex")
            if e in seen:
                raise FormatError(f"duplicate edge id {e}", lineno)
            if u >= n or v >= n:
                raise FormatError(f"vertex out of range [0, {n})", lineno)
            if u == v:
                raise FormatError("loops are not allowed", lineno)
            seen.add(e)
            edges.append((e, u, v))
        elif tokens[0] in extra_keywords:
            extras.append((lineno, tokens))
        else:
            raise FormatError(f"unknown keyword {tokens[0]!r}", lineno)
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", 1)
    return MultiGraph(tuple(range(n)), tuple(edges), name), extras


def split_lines(text: str) -> list[str]:
    if text.endswith("\n"):
        text = text[:-1]
    if "\r" in text:
        raise FormatError("CR characters are not allowed; use LF newlines")
    return text.split("\n") if text else []


def loads(text: str) -> MultiGraph:
    G, _ = parse_graph_lines(split_lines(text))
    return G
