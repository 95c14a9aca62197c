"""Graph families: complete graphs, insertion, Y_{k,t}, X_{k,t}, the
non-Hamiltonian splice graph, and small cubic fixtures.

Labels follow the usual conventions: hub vertices ``v_i`` (1-based ``i``),
gadgets ``X_i^j`` keyed ``(i, j)``, hub edges ``e_i^j`` keyed ``(i, j)``,
gadget edges ``f_{i,l}^j`` keyed ``(i, l, j)`` and the line-graph edge sets
``E_i`` keyed ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import FormatError, GraphError, MultiGraph, _int, dumps, parse_graph_lines, split_lines


@dataclass(frozen=True)
class Insertion:
    """Result of inserting ``Xp - upvp`` into edge ``uv`` of ``X``.

    ``X`` keeps all of its vertex and edge ids.  ``Xp`` is shifted by
    ``vertex_offset`` / ``edge_offset``.  The edge joining ``u`` to ``up``
    reuses the id ``uv`` and the edge joining ``v`` to ``vp`` reuses the
    shifted id of ``upvp``.
    """

    X: MultiGraph
    Xp: MultiGraph
    uv: int
    upvp: int
    Y: MultiGraph
    u: int
    v: int
    up: int  # ids in Y
    vp: int
    vertex_offset: int
    edge_offset: int

    @property
    def uu_edge(self) -> int:
        return self.uv

    @property
    def vv_edge(self) -> int:
        return self.upvp + self.edge_offset

    def map_xp_edge(self, e: int) -> int:
        return e + self.edge_offset


def complete_graph(n: int) -> MultiGraph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return MultiGraph.from_edge_list(n, combinations(range(n), 2), f"K{n}")


def complete_minus_edge(n: int) -> tuple[MultiGraph, tuple[int, int]]:
    """``K_n`` minus the edge ``{0, 1}``; returns the graph and the removed pair."""
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    pairs = [p for p in combinations(range(n), 2) if p != (0, 1)]
    return MultiGraph.from_edge_list(n, pairs, f"K{n}-e"), (0, 1)


def insert_with_map(X: MultiGraph, uv: int, Xp: MultiGraph, upvp: int, name: str | None = None) -> Insertion:
    """Insert ``Xp - upvp`` into the edge ``uv`` of ``X``.

    The lower-id endpoint of ``uv`` is joined to the lower-id endpoint of
    ``upvp``.
    """
    if not X.has_edge(uv):
        raise GraphError(f"edge {uv} not in host graph")
    if not Xp.has_edge(upvp):
        raise GraphError(f"edge {upvp} not in inserted graph")
    voff = max(X.vertices) + 1
    eoff = max(X.edge_ids) + 1
    u, v = sorted(X.endpoints(uv))
    up, vp = (w + voff for w in sorted(Xp.endpoints(upvp)))
    edges = []
    for e, a, b in X.edges:
        edges.append((e, u, up) if e == uv else (e, a, b))
    for e, a, b in Xp.edges:
        edges.append((e + eoff, v, vp) if e == upvp else (e + eoff, a + voff, b + voff))
    Y = MultiGraph(
        X.vertices + tuple(w + voff for w in Xp.vertices),
        tuple(edges),
        name or X.name,
    )
    return Insertion(X, Xp, uv, upvp, Y, u, v, up, vp, voff, eoff)


def insert(X: MultiGraph, uv: int, Xp: MultiGraph, upvp: int) -> MultiGraph:
    return insert_with_map(X, uv, Xp, upvp).Y


@dataclass(frozen=True)
class LabeledFamily:
    graph: MultiGraph
    kind: str
    params: dict
    hub_vertices: dict = field(default_factory=dict)
    gadgets: dict = field(default_factory=dict)
    special_edges: dict = field(default_factory=dict)
    gadget_edges: dict = field(default_factory=dict)
    cut_sets: dict = field(default_factory=dict)
    insertions: tuple = ()


def build_Y(k: int, t: int) -> LabeledFamily:
    """The multigraph on hubs ``v_1..v_t`` with two edges ``v_i v_{i+1}`` for
    odd ``i`` and ``k - 2`` edges for even ``i`` (indices mod ``t``)."""
    _check_kt(k, t)
    pairs = []
    for i in range(1, t + 1):
        a, b = i - 1, i % t
        pairs += [(a, b)] * (2 if i % 2 else k - 2)
    G = MultiGraph.from_edge_list(t, pairs, f"Y_{k}_{t}")
    return LabeledFamily(G, "ykt", {"k": k, "t": t}, hub_vertices={i: i - 1 for i in range(1, t + 1)})


def _check_kt(k: int, t: int) -> None:
    if k < 3:
        raise GraphError("k must be at least 3")
    if t < 4 or t % 2:
        raise GraphError("t must be even and at least 4")


def theorem_instance_t(k: int) -> int:
    """Smallest admissible ``t`` with ``t >= k``."""
    t = max(4, k)
    return t + (t % 2)


def build_X(k: int, t: int) -> LabeledFamily:
    """``Y_{k,t}`` with a copy of ``K_{k+1} - e`` inserted into every edge."""
    _check_kt(k, t)
    Yf = build_Y(k, t)
    # inserting K_{k+1} - {0,1} places a K_{k+1}-e gadget attached at 0 and 1
    full = complete_graph(k + 1)
    removed = full.edge_between(0, 1)
    G = Yf.graph
    gadgets = {}
    attach = {}  # gadget key -> (hub-side edge at lower hub, at upper hub)
    ys = list(Yf.graph.edges)
    mult = {}
    for e, a, b in ys:
        i = a + 1  # Y edge joins v_i and v_{i+1}
        mult[i] = mult.get(i, 0) + 1
        key = (i, mult[i])
        ins = insert_with_map(G, e, full, removed)
        G = ins.Y
        gadgets[key] = frozenset(w + ins.vertex_offset for w in full.vertices)
        attach[key] = (ins.u, ins.uu_edge, ins.v, ins.vv_edge)
    G = G.renamed(f"X_{k}_{t}")

    hubs = Yf.hub_vertices
    special = {}
    for key, (hu, eu, hv, ev) in sorted(attach.items()):
        i, j = key
        for hub, edge in ((hu, eu), (hv, ev)):
            h = hub + 1
            if i % 2:
                # odd gadgets carry e_h^1, e_h^2
                special[(h, j)] = edge
            else:
                special[(h, j + 2)] = edge
    gadget_edges = {}
    for i in range(1, t + 1, 2):
        for j in (1, 2):
            for h in (i, i % t + 1):
                e = special[(h, j)]
                inner = G.other_end(e, hubs[h])
                fs = sorted(f for f in G.edges_at(inner) if f != e)
                for l, f in enumerate(fs, start=1):
                    gadget_edges[(h, l, j)] = f
    cut_sets = {}
    for i in range(1, t + 1):
        first = [special[(i, 1)], special[(i, 2)]]
        rest = [special[(i, j)] for j in range(3, k + 1)]
        cut_sets[i] = frozenset((min(a, b), max(a, b)) for a in first for b in rest)
    return LabeledFamily(
        G,
        "xkt",
        {"k": k, "t": t},
        hub_vertices=dict(hubs),
        gadgets=gadgets,
        special_edges=special,
        gadget_edges=gadget_edges,
        cut_sets=cut_sets,
    )


def build_theorem4(k: int) -> LabeledFamily:
    """``K_{k+1}`` with ``K_{k+1} - u'_i v'_i`` inserted into the three edges
    ``v u_i`` (``v = 0``, ``u_i = i``): simple, ``k``-regular, non-Hamiltonian.

    ``cut_sets[i]`` is the pair ``(v v'_i, u_i u'_i)``.  ``insertions`` holds the
    three :class:`Insertion` records in order, so a decomposition of the host
    line graph can be spliced along the same chain.
    """
    if k < 4:
        raise GraphError("k must be at least 4")
    host = complete_graph(k + 1)
    v = 0
    G = host
    chain = []
    cut_sets = {}
    special = {}
    for i in (1, 2, 3):
        uv = host.edge_between(v, i)
        Xp = complete_graph(k + 1).renamed(f"K{k + 1}_{i}")
        ins = insert_with_map(G, uv, Xp, Xp.edge_between(0, 1))
        chain.append(ins)
        G = ins.Y
        # v = 0 is the lower endpoint of every v u_i, so ins.u == v always
        vv = ins.uu_edge if ins.u == v else ins.vv_edge
        uu = ins.vv_edge if ins.u == v else ins.uu_edge
        cut_sets[i] = (vv, uu)
        special[("vv", i)] = vv
        special[("uu", i)] = uu
        special[("host", i)] = uv
        special[("gadget", i)] = ins.map_xp_edge(Xp.edge_between(0, 1))
    G = G.renamed(f"T4_{k}")
    return LabeledFamily(
        G,
        "theorem4",
        {"k": k},
        hub_vertices={"v": v, 1: 1, 2: 2, 3: 3},
        gadgets={i: frozenset(w + c.vertex_offset for w in c.Xp.vertices) for i, c in enumerate(chain, 1)},
        special_edges=special,
        cut_sets=cut_sets,
        insertions=tuple(chain),
    )


# -- small fixtures ----------------------------------------------------------


def bridged_cubic_example() -> MultiGraph:
    """Two copies of K_4, one edge of each subdivided, the subdivision
    vertices joined by a bridge.  10 vertices, 15 edges."""
    pairs = []
    for base in (0, 5):
        k4 = [(base + a, base + b) for a, b in combinations(range(4), 2) if (a, b) != (0, 1)]
        s = base + 4
        pairs += k4 + [(base, s), (base + 1, s)]
    pairs.append((4, 9))
    return MultiGraph.from_edge_list(10, pairs, "bridged_cubic")


def petersen_graph() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_edge_list(10, outer + spokes + inner, "petersen")


def prism_graph(n: int = 3) -> MultiGraph:
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return MultiGraph.from_edge_list(2 * n, top + bottom + rungs, f"prism{n}")


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return MultiGraph.from_edge_list(p + q, [(a, p + b) for a in range(p) for b in range(q)], f"K{p}_{q}")


def star(n: int) -> MultiGraph:
    return MultiGraph.from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)], f"star{n}")


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


# -- text format -------------------------------------------------------------

_LABEL_KEYWORDS = ("label", "cutset", "family")


def dumps_family(F: LabeledFamily) -> str:
    """Graph text plus label blocks.  Only the ``xkt``/``ykt`` labels and the
    splice-graph cut pairs are written; insertion records are not."""
    lines = [dumps(F.graph).rstrip("\n")]
    lines.append("family " + F.kind + "".join(f" {k}={v}" for k, v in sorted(F.params.items())))
    for i, vid in F.hub_vertices.items():
        lines.append(f"label v {i} {vid}")
    if F.kind == "xkt":
        for (i, j), e in sorted(F.special_edges.items()):
            lines.append(f"label e {i} {j} {e}")
        for (i, l, j), e in sorted(F.gadget_edges.items()):
            lines.append(f"label f {i} {l} {j} {e}")
        for i, pairs in sorted(F.cut_sets.items()):
            lines.append(f"cutset E {i} " + " ".join(f"{a},{b}" for a, b in sorted(pairs)))
    elif F.kind == "theorem4":
        for i, (vv, uu) in sorted(F.cut_sets.items()):
            lines.append(f"cutset T {i} {vv} {uu}")
    return "\n".join(lines) + "\n"


def loads_family(text: str) -> LabeledFamily:
    G, extras = parse_graph_lines(split_lines(text), _LABEL_KEYWORDS)
    kind, params = "plain", {}
    hubs, special, fedges, cuts = {}, {}, {}, {}
    for lineno, tokens in extras:
        head = tokens[0]
        if head == "family":
            kind = tokens[1] if len(tokens) > 1 else ""
            for tok in tokens[2:]:
                key, sep, value = tok.partition("=")
                if not sep:
                    raise FormatError(f"bad family parameter {tok!r}", lineno)
                params[key] = _int(value, lineno, "parameter")
        elif head == "label" and len(tokens) >= 2 and tokens[1] == "v" and len(tokens) == 4:
            key = tokens[2] if tokens[2] == "v" else _int(tokens[2], lineno, "index")
            hubs[key] = _vertex(G, tokens[3], lineno)
        elif head == "label" and len(tokens) == 5 and tokens[1] == "e":
            key = (_int(tokens[2], lineno, "index"), _int(tokens[3], lineno, "index"))
            special[key] = _edge(G, tokens[4], lineno)
        elif head == "label" and len(tokens) == 6 and tokens[1] == "f":
            key = tuple(_int(x, lineno, "index") for x in tokens[2:5])
            fedges[key] = _edge(G, tokens[5], lineno)
        elif head == "cutset" and len(tokens) >= 3 and tokens[1] == "E":
            pairs = []
            for tok in tokens[3:]:
                a, sep, b = tok.partition(",")
                if not sep:
                    raise FormatError(f"bad edge pair {tok!r}", lineno)
                pairs.append((_edge(G, a, lineno), _edge(G, b, lineno)))
            cuts[_int(tokens[2], lineno, "index")] = frozenset(pairs)
        elif head == "cutset" and len(tokens) == 5 and tokens[1] == "T":
            cuts[_int(tokens[2], lineno, "index")] = (_edge(G, tokens[3], lineno), _edge(G, tokens[4], lineno))
        else:
            raise FormatError(f"malformed {head} line", lineno)
    return LabeledFamily(G, kind, params, hubs, {}, special, fedges, cuts)


def _vertex(G: MultiGraph, token: str, lineno: int) -> int:
    v = _int(token, lineno, "vertex")
    if v not in set(G.vertices):
        raise FormatError(f"vertex {v} out of range", lineno)
    return v


def _edge(G: MultiGraph, token: str, lineno: int) -> int:
    e = _int(token, lineno, "edge id")
    if not G.has_edge(e):
        raise FormatError(f"unknown edge id {e}", lineno)
    return e
