import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linedecomp import families as fam
from linedecomp.graph import (
    FormatError,
    GraphError,
    MultiGraph,
    components,
    dumps,
    is_edge_cut,
    loads,
    min_edge_cut,
)
from linedecomp.linegraph import line_graph

from oracles import edge_cut_brute_force, to_nx


@st.composite
def multigraphs(draw, max_n=8, max_m=16):
    n = draw(st.integers(2, max_n))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_m,
        )
    )
    return MultiGraph.from_edge_list(n, pairs)


def test_components_k4():
    assert components(fam.complete_graph(4)) == [frozenset(range(4))]


def test_components_two_blocks():
    G = MultiGraph.from_edge_list(4, [(0, 1), (2, 3)])
    assert components(G) == [frozenset({0, 1}), frozenset({2, 3})]


def test_components_x34_matches_bfs(x34):
    blocks = components(x34.graph)
    expected = list(nx.connected_components(to_nx(x34.graph)))
    assert len(blocks) == len(expected) == 1
    assert len(blocks[0]) == 28


def test_simple_and_regular_predicates():
    Y = fam.build_Y(3, 4).graph
    assert not Y.is_simple() and Y.is_regular() == 3
    X = fam.build_X(3, 4).graph
    assert X.is_simple() and X.is_regular() == 3
    K5 = fam.complete_graph(5)
    assert K5.is_simple() and K5.is_regular() == 4
    assert fam.star(3).is_regular() is None


def test_loops_rejected():
    with pytest.raises(GraphError):
        MultiGraph.from_edge_list(2, [(1, 1)])


def test_duplicate_edge_ids_rejected():
    with pytest.raises(GraphError):
        MultiGraph((0, 1), ((0, 0, 1), (0, 1, 0)))


def test_min_edge_cut_k4():
    size, cut = min_edge_cut(fam.complete_graph(4))
    assert size == 3 and len(cut) == 3


def test_min_edge_cut_theorem4_graph():
    F = fam.build_theorem4(4)
    size, cut = min_edge_cut(F.graph)
    assert size == 2
    assert tuple(sorted(cut)) in {tuple(sorted(p)) for p in F.cut_sets.values()}


def test_min_edge_cut_line_graph_x34(x34):
    L = line_graph(x34.graph).as_multigraph()
    size, cut = min_edge_cut(L)
    assert size == nx.edge_connectivity(nx.Graph(to_nx(L))) == 4
    assert is_edge_cut(L, cut)


def test_min_edge_cut_errors():
    with pytest.raises(GraphError, match="disconnected"):
        min_edge_cut(MultiGraph.from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError, match="trivial"):
        min_edge_cut(MultiGraph((0,), ()))


def test_min_edge_cut_is_deterministic():
    G = fam.prism_graph(4)
    assert min_edge_cut(G) == min_edge_cut(G)


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_handshake(G):
    assert sum(G.degree(v) for v in G.vertices) == 2 * G.num_edges


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_components_commute_with_relabeling(G, rng):
    perm = list(G.vertices)
    rng.shuffle(perm)
    mapping = dict(zip(G.vertices, perm))
    H = MultiGraph(tuple(sorted(perm)), tuple((e, mapping[a], mapping[b]) for e, a, b in G.edges))
    image = {frozenset(mapping[v] for v in block) for block in components(G)}
    assert set(components(H)) == image


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=6, max_m=9))
def test_min_edge_cut_against_brute_force(G):
    if len(components(G)) > 1:
        return
    size, cut = min_edge_cut(G)
    assert size == edge_cut_brute_force(G)
    assert size == len(cut) and is_edge_cut(G, cut)
    assert size <= G.min_degree()


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_serialization_round_trip(G):
    assert loads(dumps(G)) == G
    assert dumps(loads(dumps(G))) == dumps(G)


@pytest.mark.parametrize(
    "text, message",
    [
        ("graph G 2 1\nedge 0 0 2\n", "out of range"),
        ("graph G 3 2\nedge 0 0 1\nedge 0 1 2\n", "duplicate edge id"),
        ("graph G 2 1\nvertex 0\n", "unknown keyword"),
        ("graph G 2 2\nedge 0 0 1\n", "announces 2 edges"),
        ("graph G 2 1\nedge x 0 1\n", "not an integer"),
        ("grph G 2 1\nedge 0 0 1\n", "expected 'graph"),
    ],
)
def test_parser_is_strict(text, message):
    with pytest.raises(FormatError, match=message):
        loads(text)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FormatError) as info:
        loads("graph G 3 2\nedge 0 0 1\nedge 1 1 7\n")
    assert info.value.lineno == 3
