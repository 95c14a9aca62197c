"""Exact backtracking search and proof checkers.

* :func:`find_hamilton_cycle` -- path extension with connectivity,
  degree and forced-edge pruning.
* :func:`find_hamilton_decomposition` and :func:`find_perfect_euler_set` --
  both colour a set of links (line-graph edges, or transitions) with ``r``
  colours so that every colour class is a single spanning cycle.  They share
  :class:`_CycleColouring`.
* :func:`audit_theorem1` and :func:`certify_theorem4_nonhamiltonian` -- check
  the cut arguments behind the two constructions directly.
"""

from __future__ import annotations

import sys
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .families import LabeledFamily
from .graph import GraphError, MultiGraph, components, is_connected, is_edge_cut
from .linegraph import LineGraph, line_graph
from .tours import Check, Decomposition, EulerTour, dumps_decomposition, dumps_hamilton_cycle, dumps_tours

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10**12
    wall_limit: float = 3600.0

    def __post_init__(self):
        if self.node_limit <= 0 or self.wall_limit <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: object = None
    nodes_explored: int = 0

    def __post_init__(self):
        if (self.witness is not None) != (self.status == FOUND):
            raise ValueError("witness must be present exactly when status is found")


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.wall_limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def _deep_recursion(depth: int):
    limit = sys.getrecursionlimit()
    if limit < depth + 200:
        sys.setrecursionlimit(depth + 200)


# -- Hamilton cycles -------------------------------------------------------------


def find_hamilton_cycle(
    G: MultiGraph,
    budget: SearchBudget | None = None,
    cut_pairs: Iterable[Iterable[int]] = (),
) -> SearchOutcome:
    """Search for a Hamilton cycle of a simple graph.

    ``cut_pairs`` may list known 2-edge cuts; both edges of each are then
    forced into the cycle.  The witness is the vertex sequence of the cycle.
    """
    budget = budget or SearchBudget()
    counter = _Counter(budget)
    n = G.num_vertices
    if n < 3 or not G.is_simple() or not is_connected(G):
        return SearchOutcome(EXHAUSTED, None, 0)
    adj = {v: sorted(set(G.neighbors(v))) for v in G.vertices}
    forced: dict[int, set[int]] = {v: set() for v in G.vertices}
    for pair in cut_pairs:
        pair = list(pair)
        if len(pair) != 2 or not is_edge_cut(G, pair):
            raise GraphError(f"{pair} is not a 2-edge cut")
        for e in pair:
            a, b = G.endpoints(e)
            forced[a].add(b)
            forced[b].add(a)
    if any(len(f) > 2 for f in forced.values()):
        return SearchOutcome(EXHAUSTED, None, 1)

    start = min(G.vertices)
    visited = {v: False for v in G.vertices}
    visited[start] = True
    path = [start]
    result: list[int] = []
    _deep_recursion(n)

    def available(w: int, tail: int) -> int:
        return sum(1 for x in adj[w] if not visited[x] or x == tail or x == start)

    def feasible(tail: int) -> bool:
        # every unvisited vertex keeps two usable neighbours
        unvisited = [w for w in G.vertices if not visited[w]]
        for w in unvisited:
            if available(w, tail) < 2:
                return False
        # unvisited vertices hang together through tail
        seen = {tail}
        queue = deque([tail])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) - 1 == len(unvisited)

    def extend(tail: int) -> bool:
        counter.tick()
        if len(path) == n:
            if start in adj[tail] and (not forced[start] or forced[start] <= {path[1], tail}):
                result.extend(path)
                return True
            return False
        if not feasible(tail):
            return False
        candidates = [w for w in adj[tail] if not visited[w]]
        prev = path[-2] if len(path) > 1 else None
        must = [w for w in forced[tail] if w != prev and not visited[w]]
        if tail != start and any(w != prev and visited[w] for w in forced[tail]):
            return False
        if tail != start and len(must) > 1:
            return False
        if len(path) > 1:
            tight = [w for w in candidates if available(w, tail) == 2]
            must = sorted(set(must) | set(tight))
            if len(must) > 1:
                return False
        if must and (len(path) > 1 or len(must) == 1):
            candidates = [w for w in candidates if w in must]
        for w in candidates:
            visited[w] = True
            path.append(w)
            if extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    try:
        found = extend(start)
    except _OutOfBudget:
        return SearchOutcome(BUDGET_EXCEEDED, None, counter.nodes)
    if found:
        return SearchOutcome(FOUND, tuple(result), counter.nodes)
    return SearchOutcome(EXHAUSTED, None, counter.nodes)


# -- colouring engine --------------------------------------------------------------


class _CycleColouring:
    """Assign each link one of ``colours`` colours so that every colour class
    is a single cycle through all ``num_nodes`` nodes.

    ``links[i] = (x, y, gx, gy)`` joins nodes ``x`` and ``y``; ``gx``/``gy``
    are capacity groups at the two ends.  A colour may occur at most
    ``caps[g]`` times in group ``g``.  Colour classes are interchangeable, so
    a link may only open colour ``c`` if colours ``0..c-1`` are already used.
    """

    def __init__(self, num_nodes, links, caps, colours, counter):
        self.N = num_nodes
        self.links = links
        self.caps = caps
        self.colours = colours
        self.counter = counter
        self.assign = [-1] * len(links)
        self.deg = [[0] * num_nodes for _ in range(colours)]
        self.other = [list(range(num_nodes)) for _ in range(colours)]
        self.size = [[1] * num_nodes for _ in range(colours)]
        self.group = [[0] * len(caps) for _ in range(colours)]

    def run(self, on_solution: Callable[[list[int]], bool]) -> bool:
        """Depth-first search; ``on_solution`` returns True to stop."""
        _deep_recursion(len(self.links))
        return self._search(0, 0, on_solution)

    def _search(self, i, used, on_solution):
        self.counter.tick()
        if i == len(self.links):
            return on_solution(list(self.assign))
        x, y, gx, gy = self.links[i]
        for c in range(min(used + 1, self.colours)):
            group = self.group[c]
            if group[gx] >= self.caps[gx] or group[gy] >= self.caps[gy]:
                continue
            deg, other, size = self.deg[c], self.other[c], self.size[c]
            if deg[x] >= 2 or deg[y] >= 2:
                continue
            ox, oy = other[x], other[y]
            closing = ox == y
            if closing and size[x] != self.N:
                continue
            saved = (ox, oy, other[ox], other[oy], size[ox], size[oy])
            if not closing:
                merged = size[x] + size[y]
                other[ox], other[oy] = oy, ox
                size[ox] = size[oy] = merged
            deg[x] += 1
            deg[y] += 1
            group[gx] += 1
            group[gy] += 1
            self.assign[i] = c
            stop = self._search(i + 1, max(used, c + 1), on_solution)
            self.assign[i] = -1
            group[gx] -= 1
            group[gy] -= 1
            deg[x] -= 1
            deg[y] -= 1
            if not closing:
                other[ox], other[oy], size[ox], size[oy] = saved[2], saved[3], saved[4], saved[5]
            if stop:
                return True
        return False


def _traverse(num_nodes, links, assign, colour) -> tuple[list[int], list[int]]:
    """Node sequence of one colour class and the link taken after each node."""
    at: dict[int, list[int]] = {}
    for i, c in enumerate(assign):
        if c == colour:
            x, y = links[i][0], links[i][1]
            at.setdefault(x, []).append(i)
            at.setdefault(y, []).append(i)
    node = 0
    last = None
    order, via = [], []
    for _ in range(num_nodes):
        order.append(node)
        nxt = at[node][0] if at[node][0] != last else at[node][1]
        via.append(nxt)
        x, y = links[nxt][0], links[nxt][1]
        node = y if x == node else x
        last = nxt
    return order, via


def _bfs_order(nodes: list[int], neighbours: Callable[[int], Iterable[int]]) -> list[int]:
    seen, order = set(), []
    for s in nodes:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(neighbours(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def _run_colouring(num_nodes, links, caps, colours, budget, limit):
    """Collect up to ``limit`` colourings; returns (status, solutions, nodes)."""
    counter = _Counter(budget or SearchBudget())
    solutions: list[list[int]] = []

    def keep(assign):
        solutions.append(assign)
        return len(solutions) >= limit

    engine = _CycleColouring(num_nodes, links, caps, colours, counter)
    try:
        engine.run(keep)
    except _OutOfBudget:
        status = FOUND if solutions else BUDGET_EXCEEDED
        return status, solutions, counter.nodes
    return (FOUND if solutions else EXHAUSTED), solutions, counter.nodes


# -- Hamilton decompositions -------------------------------------------------------


def _decomposition_links(L: LineGraph, etc_required: Iterable[int] | None):
    verts = list(L.vertices)
    index = {e: i for i, e in enumerate(verts)}
    required = set(etc_required or ())
    unknown = required - set(verts)
    if unknown:
        raise GraphError(f"constraint names unknown line graph vertices {sorted(unknown)}")
    groups: dict[tuple, int] = {}
    caps: list[int] = []

    def group(x: int, f: int) -> int:
        key = (x, L.side(x, f)) if x in required else (x,)
        if key not in groups:
            groups[key] = len(caps)
            caps.append(1 if x in required else 2)
        return groups[key]

    order = _bfs_order(sorted(verts), L.neighbors)
    pairs, listed = [], set()
    for x in order:
        for y in L.neighbors(x):
            key = L.edge_key(x, y)
            if key not in listed:
                listed.add(key)
                pairs.append(key)
    links = [(index[a], index[b], group(a, b), group(b, a)) for a, b in pairs]
    return verts, links, caps


def _decode_decomposition(verts, links, assign, colours) -> Decomposition:
    cycles = []
    for c in range(colours):
        order, _ = _traverse(len(verts), links, assign, c)
        cycles.append(tuple(verts[i] for i in order))
    return Decomposition(tuple(cycles)).canonical()


def enumerate_hamilton_decompositions(
    L: LineGraph,
    etc_required: Iterable[int] | None = None,
    budget: SearchBudget | None = None,
    limit: int = 1,
) -> tuple[str, list[Decomposition], int]:
    degrees = {L.degree(e) for e in L.vertices}
    if len(degrees) != 1 or degrees.pop() % 2:
        raise GraphError("no decomposition possible")
    r = L.degree(L.vertices[0]) // 2
    if r == 0 or L.num_vertices < 3:
        raise GraphError("no decomposition possible")
    verts, links, caps = _decomposition_links(L, etc_required)
    status, sols, nodes = _run_colouring(len(verts), links, caps, r, budget, limit)
    return status, [_decode_decomposition(verts, links, a, r) for a in sols], nodes


def find_hamilton_decomposition(
    L: LineGraph,
    etc_required: Iterable[int] | None = None,
    budget: SearchBudget | None = None,
) -> SearchOutcome:
    """Decompose a ``2r``-regular line graph into ``r`` Hamilton cycles.

    ``etc_required`` lists line vertices at which every cycle must be Euler
    tour compatible.
    """
    status, sols, nodes = enumerate_hamilton_decompositions(L, etc_required, budget, 1)
    return SearchOutcome(status, sols[0] if sols else None, nodes)


# -- perfect sets of Euler tours -------------------------------------------------


def _euler_links(X: MultiGraph):
    edges = list(X.edge_ids)
    index = {e: i for i, e in enumerate(edges)}
    dart_group: dict[tuple[int, str], int] = {}
    links = []
    vertex_of = []
    for w in _bfs_order(sorted(X.vertices), X.neighbors):
        darts = X.darts_at(w)
        for d in darts:
            dart_group[d] = len(dart_group)
        for d1, d2 in combinations(darts, 2):
            links.append((index[d1[0]], index[d2[0]], dart_group[d1], dart_group[d2]))
            vertex_of.append(w)
    return edges, links, [1] * len(dart_group), vertex_of


def _decode_tours(edges, links, vertex_of, assign, colours) -> list[EulerTour]:
    tours = []
    for c in range(colours):
        order, via = _traverse(len(edges), links, assign, c)
        # via[i] links edge order[i] to order[i+1]; its vertex is v_{i+1}
        verts = [vertex_of[via[-1]]] + [vertex_of[via[i]] for i in range(len(order) - 1)]
        tours.append(EulerTour(tuple(verts), tuple(edges[i] for i in order)))
    return tours


def enumerate_perfect_euler_sets(
    X: MultiGraph, budget: SearchBudget | None = None, limit: int = 1
) -> tuple[str, list[list[EulerTour]], int]:
    k = X.is_regular()
    if any(X.degree(v) % 2 for v in X.vertices):
        raise GraphError("no Euler tour exists")
    if k is None:
        raise GraphError("perfect tour search needs a regular graph")
    if not is_connected(X) or k == 0:
        raise GraphError("no Euler tour exists")
    edges, links, caps, vertex_of = _euler_links(X)
    status, sols, nodes = _run_colouring(len(edges), links, caps, k - 1, budget, limit)
    return status, [_decode_tours(edges, links, vertex_of, a, k - 1) for a in sols], nodes


def find_perfect_euler_set(X: MultiGraph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Search for ``k - 1`` Euler tours of a ``k``-regular graph (``k`` even)
    that together use every transition exactly once.

    Transitions are handled vertex by vertex: at each vertex every tour gets
    a perfect matching of the darts, and each tour's transitions must close
    up into one trail through all edges.
    """
    status, sols, nodes = enumerate_perfect_euler_sets(X, budget, 1)
    return SearchOutcome(status, sols[0] if sols else None, nodes)


# -- proof checkers -------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    witness: object = None

    def __str__(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f" [{self.witness}]" if self.witness is not None else "")


@dataclass(frozen=True)
class AuditReport:
    claims: tuple[Claim, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def __str__(self):
        lines = [str(c) for c in self.claims]
        good = sum(c.passed for c in self.claims)
        lines.append(f"{good}/{len(self.claims)} claims pass")
        return "\n".join(lines)


def _check_xkt_labels(F: LabeledFamily) -> tuple[int, int]:
    if F.kind != "xkt" or "k" not in F.params or "t" not in F.params:
        raise GraphError("audit needs an X_{k,t} family")
    k, t = F.params["k"], F.params["t"]
    G = F.graph
    for i in range(1, t + 1):
        hub = F.hub_vertices.get(i)
        if hub is None:
            raise GraphError(f"missing hub label v_{i}")
        at_hub = set(G.edges_at(hub))
        labelled = [F.special_edges.get((i, j)) for j in range(1, k + 1)]
        if None in labelled or set(labelled) != at_hub:
            raise GraphError(f"edges e_{i}^j do not match the edges at v_{i}")
        cut = F.cut_sets.get(i)
        first = {labelled[0], labelled[1]}
        if cut is None or len(cut) != 2 * (k - 2):
            raise GraphError(f"E_{i} should have {2 * (k - 2)} edges")
        for a, b in cut:
            if len({a, b} & first) != 1 or not {a, b} <= at_hub:
                raise GraphError(f"E_{i} contains a pair not of the form e_{i}^1/2 - e_{i}^j")
    for i in range(1, t + 1, 2):
        for j in (1, 2):
            for h in (i, i + 1):
                if any((h, l, j) not in F.gadget_edges for l in range(1, k)):
                    raise GraphError(f"missing f labels for e_{h}^{j}")
    return k, t


def audit_theorem1(F: LabeledFamily, L: LineGraph | None = None) -> AuditReport:
    """Check the cut structure used to rule out a Hamilton decomposition of
    ``L(X_{k,t})``.

    1. For odd ``i`` and ``j`` in {1, 2}, deleting line vertices ``e_i^j`` and
       ``e_{i+1}^j`` cuts off the interior of gadget ``X_i^j``.
    2. Inside that cut, ``e_h^j`` (``h = i, i+1``) reaches the gadget only
       through the ``k - 1`` line edges to ``f_{h,1..k-1}^j``, so every
       Hamilton cycle uses exactly one of them.
    3. For ``a < b``, ``E_a`` and ``E_b`` are line edges and deleting them
       disconnects the line graph.
    4. ``t >= k``, so two of the ``t`` edges ``e_i^1 e_i^2`` share one of the
       ``k - 1`` cycles.
    """
    k, t = _check_xkt_labels(F)
    G = F.graph
    L = L or line_graph(G)
    LG = L.as_multigraph()
    hubs = set(F.hub_vertices.values())
    hub_edges = {e for h in hubs for e in G.edges_at(h)}
    claims = []
    for i in range(1, t + 1, 2):
        for j in (1, 2):
            cut = (F.special_edges[(i, j)], F.special_edges[(i + 1, j)])
            rest = LG.without_vertices(cut)
            comps = components(rest)
            inner = next(c for c in comps if F.gadget_edges[(i, 1, j)] in c)
            ok = len(comps) > 1 and not (inner & hub_edges)
            claims.append(Claim(f"vertex cut {{e_{i}^{j}, e_{i + 1}^{j}}}", ok, f"gadget side has {len(inner)} line vertices"))
            for h, e in zip((i, i + 1), cut):
                expected = {F.gadget_edges[(h, l, j)] for l in range(1, k)}
                reach = {f for f in L.neighbors(e) if f in inner}
                ok = reach == expected and len(reach) == k - 1
                claims.append(Claim(f"e_{h}^{j} enters gadget via {k - 1} edges f_{h},l^{j}", ok, sorted(reach)))
    for a, b in combinations(range(1, t + 1), 2):
        pairs = F.cut_sets[a] | F.cut_sets[b]
        present = all(L.adjacent(x, y) for x, y in pairs)
        if present:
            index = L.edge_index()
            split = components(LG.without_edges(index[p] for p in pairs))
            ok = len(split) > 1
            witness = sorted(len(c) for c in split)
        else:
            ok, witness = False, "a listed pair is not a line graph edge"
        claims.append(Claim(f"edge cut E_{a} + E_{b}", ok, witness))
    claims.append(Claim(f"pigeonhole t={t} > k-1={k - 1}", t > k - 1))
    return AuditReport(tuple(claims))


def certify_theorem4_nonhamiltonian(F: LabeledFamily) -> Check:
    """Proof check: each labelled pair is a 2-edge cut, so a Hamilton cycle
    would use all six edges, but three of them meet at one vertex."""
    if F.kind != "theorem4" or len(F.cut_sets) != 3:
        raise GraphError("labels missing: need the three cut pairs")
    G = F.graph
    forced_deg: dict[int, int] = {}
    for i, pair in sorted(F.cut_sets.items()):
        if len(set(pair)) != 2 or not is_edge_cut(G, pair):
            return Check(False, "not an edge cut", (i, tuple(pair)))
        for e in pair:
            for w in G.endpoints(e):
                forced_deg[w] = forced_deg.get(w, 0) + 1
    over = sorted(w for w, d in forced_deg.items() if d > 2)
    if not over:
        return Check(False, "forced edges do not overload a vertex")
    return Check(True, "three forced edges meet at a vertex", over[0])


# -- text output -------------------------------------------------------------------


def dumps_outcome(outcome: SearchOutcome, graph_name: str) -> str:
    head = f"outcome {outcome.status} nodes {outcome.nodes_explored}\n"
    w = outcome.witness
    if w is None:
        return head
    if isinstance(w, Decomposition):
        return head + dumps_decomposition(graph_name, w)
    if isinstance(w, list):
        return head + dumps_tours(graph_name, w)
    return head + dumps_hamilton_cycle(graph_name, w)
