"""Euler tours, Hamilton decompositions of line graphs, Euler-tour
compatibility, perfect tour sets, and the splice of two decompositions
along an insertion.

A Hamilton cycle of ``L(X)`` is a tuple of base edge ids; a
:class:`Decomposition` is a tuple of such cycles.  The checkers here return
:class:`Check` values instead of raising, so callers can report the failing
condition and its witness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .families import Insertion
from .graph import FormatError, GraphError, MultiGraph, _int, split_lines
from .linegraph import LineGraph, Transition, all_transitions, line_graph

HamCycle = tuple[int, ...]


class NotCompatibleError(GraphError):
    """A cycle is not Euler tour compatible where it needs to be."""


class SpliceError(GraphError):
    pass


@dataclass(frozen=True)
class Check:
    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok and not self.reason:
            return "ok"
        return f"{self.reason}: {self.witness}" if self.witness is not None else self.reason


OK = Check(True)


@dataclass(frozen=True)
class EulerTour:
    """Closed trail ``v_0, e_1, v_1, ..., e_t, v_t = v_0``.

    ``vertices[i]`` is ``v_i`` for ``i < t``; edge ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[(i + 1) % t]``.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    def transitions(self, X: MultiGraph) -> list[Transition]:
        """Transition used at each visit: arriving dart and departing dart."""
        t = len(self.edges)
        out = []
        for i in range(t):
            w = self.vertices[(i + 1) % t]
            out.append(Transition(w, (X.dart_at(self.edges[i], w), X.dart_at(self.edges[(i + 1) % t], w))))
        return out


@dataclass(frozen=True)
class Decomposition:
    cycles: tuple[HamCycle, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))

    def __len__(self):
        return len(self.cycles)

    def canonical(self) -> Decomposition:
        return Decomposition(tuple(canonical_cycle(c) for c in self.cycles))


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    n = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)]


def canonical_cycle(cycle: Sequence[int]) -> HamCycle:
    """Rotate to the smallest id and orient toward its smaller neighbour."""
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def canonical_tour(T: EulerTour) -> EulerTour:
    t = len(T.edges)
    i = T.edges.index(min(T.edges))
    verts = T.vertices[i:] + T.vertices[:i]
    edges = T.edges[i:] + T.edges[:i]
    if t > 2 and edges[-1] < edges[1]:
        # reversed walk: v_1, e_1, v_0, e_t, v_{t-1}, ...
        edges = (edges[0],) + edges[:0:-1]
        verts = (verts[1 % t], verts[0]) + verts[:1:-1]
    return EulerTour(verts, edges)


# -- validation ----------------------------------------------------------------


def check_hamilton_cycle(L: LineGraph, cycle: Sequence[int]) -> Check:
    vertices = set(L.vertices)
    seen = set()
    for e in cycle:
        if e not in vertices:
            return Check(False, "unknown vertex", e)
        if e in seen:
            return Check(False, "repeated vertex", e)
        seen.add(e)
    if len(cycle) < 3:
        return Check(False, "not a cycle", tuple(cycle))
    for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        if not L.adjacent(a, b):
            return Check(False, "not a cycle", (a, b))
    if len(seen) != len(vertices):
        missing = min(vertices - seen)
        return Check(False, "not hamiltonian", missing)
    return OK


def validate_decomposition(L: LineGraph, D: Decomposition) -> Check:
    """Every cycle is a Hamilton cycle of ``L`` and the cycles partition ``E(L)``."""
    used: dict[tuple[int, int], int] = {}
    for idx, cycle in enumerate(D.cycles):
        c = check_hamilton_cycle(L, cycle)
        if not c:
            return Check(False, f"cycle {idx + 1}: {c.reason}", c.witness)
        for pair in cycle_edges(cycle):
            if pair in used:
                return Check(False, f"edge shared by cycles {used[pair] + 1} and {idx + 1}", pair)
            used[pair] = idx
    if len(used) != L.num_edges:
        missing = next(p for p in L.edges if p not in used)
        return Check(False, "edge not covered", missing)
    return OK


def etc_at(L: LineGraph, cycle: Sequence[int], uv: int) -> bool:
    """Whether the two neighbours of ``uv`` on the cycle lie on different sides."""
    try:
        i = list(cycle).index(uv)
    except ValueError:
        raise GraphError(f"vertex {uv} is not on the cycle") from None
    prev, nxt = cycle[i - 1], cycle[(i + 1) % len(cycle)]
    return L.side(prev, uv) != L.side(nxt, uv)


def etc_failures(L: LineGraph, cycle: Sequence[int]) -> list[int]:
    return [e for e in cycle if not etc_at(L, cycle, e)]


def _require_valid(L: LineGraph, D: Decomposition) -> None:
    check = validate_decomposition(L, D)
    if not check:
        raise GraphError(f"invalid decomposition: {check}")


def etc_at_vertex_set(L: LineGraph, D: Decomposition, S: Iterable[int]) -> bool:
    _require_valid(L, D)
    S = list(S)
    return all(etc_at(L, c, uv) for c in D.cycles for uv in S)


def etc_everywhere(L: LineGraph, D: Decomposition) -> bool:
    return etc_at_vertex_set(L, D, L.vertices)


# -- tours <-> cycles ------------------------------------------------------------


def check_euler_tour(X: MultiGraph, T: EulerTour) -> Check:
    t = len(T.edges)
    if len(T.vertices) != t or t == 0:
        return Check(False, "not a tour", "vertex and edge counts differ")
    counts = Counter(T.edges)
    for e in T.edges:
        if not X.has_edge(e):
            return Check(False, "not a tour", f"unknown edge {e}")
        if counts[e] > 1:
            return Check(False, "not a tour", f"edge {e} used twice")
    if len(counts) != X.num_edges:
        missing = min(set(X.edge_ids) - set(counts))
        return Check(False, "not a tour", f"edge {missing} missing")
    for i, e in enumerate(T.edges):
        ends = sorted(X.endpoints(e))
        step = sorted((T.vertices[i], T.vertices[(i + 1) % t]))
        if ends != step:
            return Check(False, "not a tour", f"edge {e} does not join {step[0]} and {step[1]}")
    return OK


def cycle_to_tour(L: LineGraph, cycle: Sequence[int]) -> EulerTour:
    """Euler tour of the base graph traced by an everywhere compatible cycle."""
    bad = etc_failures(L, cycle)
    if bad:
        raise NotCompatibleError(f"cycle is not Euler tour compatible at line vertex {bad[0]}")
    n = len(cycle)
    # v_i is the vertex shared by e_i and e_{i+1}; v_0 sits between e_t and e_1
    shared = [L.side(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    return EulerTour((shared[-1],) + tuple(shared[:-1]), tuple(cycle))


def tour_to_cycle(X: MultiGraph, T: EulerTour) -> HamCycle:
    check = check_euler_tour(X, T)
    if not check:
        raise GraphError(str(check))
    return tuple(T.edges)


def tours_to_decomposition(X: MultiGraph, tours: Sequence[EulerTour]) -> Decomposition:
    return Decomposition(tuple(tour_to_cycle(X, T) for T in tours))


def decomposition_to_tours(L: LineGraph, D: Decomposition) -> list[EulerTour]:
    return [cycle_to_tour(L, c) for c in D.cycles]


def perfect_set_check(X: MultiGraph, tours: Sequence[EulerTour]) -> Check:
    """Every transition of ``X`` is used by exactly one of the tours."""
    if any(X.degree(v) % 2 for v in X.vertices):
        return Check(False, "odd degree vertex", next(v for v in X.vertices if X.degree(v) % 2))
    for idx, T in enumerate(tours):
        c = check_euler_tour(X, T)
        if not c:
            return Check(False, f"tour {idx + 1}: not a tour", c.witness)
    total = sum(X.degree(v) * (X.degree(v) - 1) // 2 for v in X.vertices)
    covered: dict[Transition, int] = {}
    for idx, T in enumerate(tours):
        for tr in T.transitions(X):
            if tr in covered:
                return Check(False, "transition covered twice", (str(tr), covered[tr] + 1, idx + 1))
            covered[tr] = idx
    if len(covered) != total:
        missing = next(tr for tr in all_transitions(X) if tr not in covered)
        return Check(False, "transition not covered", str(missing))
    return OK


# -- splice ----------------------------------------------------------------


def _open_path(L: LineGraph, cycle: Sequence[int], x: int, side_vertex: int) -> list[int]:
    """The cycle with ``x`` removed, as a path starting at the neighbour of
    ``x`` that shares ``side_vertex``."""
    cycle = list(cycle)
    i = cycle.index(x)
    rest = cycle[i + 1:] + cycle[:i]  # from next neighbour around to prev
    if L.side(rest[0], x) == side_vertex:
        return rest
    return rest[::-1]


def splice(ins: Insertion, DX: Decomposition, DXp: Decomposition) -> Decomposition:
    """Combine decompositions of ``L(X)`` and ``L(X')`` into one of ``L(Y)``.

    ``DX`` must be compatible at ``uv`` and ``DXp`` at ``u'v'``.  Cycle ``i``
    of the result joins cycle ``i`` of each input through the new line
    vertices ``uu'`` and ``vv'``.
    """
    if len(DX) != len(DXp):
        raise SpliceError(f"cycle count mismatch: {len(DX)} vs {len(DXp)}")
    LX, LXp = line_graph(ins.X), line_graph(ins.Xp)
    vp_local = max(ins.Xp.endpoints(ins.upvp))
    cycles = []
    for i, (H, Hp) in enumerate(zip(DX.cycles, DXp.cycles), start=1):
        if not etc_at(LX, H, ins.uv):
            raise SpliceError(f"cycle {i} of the host decomposition is not compatible at {ins.uv}")
        if not etc_at(LXp, Hp, ins.upvp):
            raise SpliceError(f"cycle {i} of the inserted decomposition is not compatible at {ins.upvp}")
        # host path runs from the u-side neighbour to the v-side neighbour
        path = _open_path(LX, H, ins.uv, ins.u)
        # inserted path runs from the v'-side neighbour to the u'-side neighbour
        path_p = _open_path(LXp, Hp, ins.upvp, vp_local)
        J = [ins.uu_edge] + [ins.map_xp_edge(e) for e in path_p[::-1]] + [ins.vv_edge] + path[::-1]
        cycles.append(tuple(J))
    return Decomposition(tuple(cycles))


# -- certificate text formats ------------------------------------------------------


def dumps_decomposition(name: str, D: Decomposition, canonicalize: bool = True) -> str:
    if canonicalize:
        D = D.canonical()
    lines = [f"decomposition {name} {len(D)}"]
    lines += [f"cycle {i}: " + " ".join(map(str, c)) for i, c in enumerate(D.cycles, 1)]
    return "\n".join(lines) + "\n"


def dumps_tours(name: str, tours: Sequence[EulerTour], canonicalize: bool = True) -> str:
    if canonicalize:
        tours = [canonical_tour(T) for T in tours]
    lines = [f"eulertours {name} {len(tours)}"]
    for i, T in enumerate(tours, 1):
        tokens = []
        for v, e in zip(T.vertices, T.edges):
            tokens += [str(v), str(e)]
        lines.append(f"tour {i}: " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def dumps_hamilton_cycle(name: str, cycle: Sequence[int]) -> str:
    return f"hamiltoncycle {name} {len(cycle)}\nvertices: " + " ".join(map(str, canonical_cycle(cycle))) + "\n"


@dataclass(frozen=True)
class Certificate:
    kind: str  # "decomposition" | "eulertours" | "hamiltoncycle"
    graph_name: str
    payload: object  # Decomposition | list[EulerTour] | tuple[int, ...]
    first_line: int = 1


def parse_certificate(lines: list[str], first_line: int = 1) -> Certificate:
    """Strict parser for the three certificate blocks.

    ``first_line`` is the file line number of ``lines[0]`` so errors point at
    the right place when the block follows an outcome header.
    """
    if not lines:
        raise FormatError("empty certificate", first_line)
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] not in ("decomposition", "eulertours", "hamiltoncycle"):
        raise FormatError("expected a certificate header", first_line)
    kind, name = head[0], head[1]
    count = _int(head[2], first_line, "count")
    body = lines[1:]
    if kind == "hamiltoncycle":
        if len(body) != 1:
            raise FormatError("expected one 'vertices:' line", first_line)
        tokens = body[0].split(" ")
        if tokens[0] != "vertices:":
            raise FormatError("expected 'vertices:'", first_line + 1)
        cyc = tuple(_int(x, first_line + 1, "vertex") for x in tokens[1:])
        if len(cyc) != count:
            raise FormatError(f"header announces {count} vertices, found {len(cyc)}", first_line)
        return Certificate(kind, name, cyc, first_line)
    if len(body) != count:
        raise FormatError(f"header announces {count} entries, found {len(body)}", first_line)
    keyword = "cycle" if kind == "decomposition" else "tour"
    items = []
    for idx, line in enumerate(body, start=1):
        lineno = first_line + idx
        tokens = line.split(" ")
        if len(tokens) < 3 or tokens[0] != keyword or tokens[1] != f"{idx}:":
            raise FormatError(f"expected '{keyword} {idx}: ...'", lineno)
        values = [_int(x, lineno, "id") for x in tokens[2:]]
        if kind == "decomposition":
            items.append(tuple(values))
        else:
            if len(values) % 2:
                raise FormatError("tour needs alternating vertex/edge ids", lineno)
            items.append(EulerTour(tuple(values[0::2]), tuple(values[1::2])))
    payload = Decomposition(tuple(items)) if kind == "decomposition" else items
    return Certificate(kind, name, payload, first_line)


def loads_certificate(text: str) -> Certificate:
    return parse_certificate(split_lines(text))
