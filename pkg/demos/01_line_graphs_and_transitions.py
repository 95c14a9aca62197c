from linedecomp import families as fam
from linedecomp.graph import min_edge_cut
from linedecomp.linegraph import all_transitions, line_graph, separating_transitions, split_at_transition

# Vertices of the line graph are the edge ids of the base graph.
K4 = fam.complete_graph(4)
L = line_graph(K4)
print(L.num_vertices, "line vertices,", L.num_edges, "line edges")

# Every line edge remembers which base vertex the two edges share.
for e, f in L.edges[:4]:
    print(f"{e} -- {f} meet at base vertex {L.side(e, f)}")

# Neighbours of a line vertex split into the two ends of its base edge
u, v = K4.endpoints(0)
print("edge 0: u-side", L.side_neighbors(0, u), "v-side", L.side_neighbors(0, v))

# A transition is an unordered pair of darts at one vertex; K4 has 3 per vertex.
ts = all_transitions(K4)
print(len(ts), "transitions, e.g.", ts[0])

# Splitting off a transition keeps edge ids and adds fresh vertices
Xt = split_at_transition(K4, ts[0])
print("split graph vertices:", Xt.vertices)

# The bridged cubic graph has separating transitions, and its line graph
# drops below 2k - 2 = 4 edge connectivity.
B = fam.bridged_cubic_example()
print(len(separating_transitions(B)), "separating transitions in", B.name)
print("min edge cut of L(bridged):", min_edge_cut(line_graph(B).as_multigraph())[0])
print("min edge cut of L(K4):", min_edge_cut(L.as_multigraph())[0])
