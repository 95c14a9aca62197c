from linedecomp import families as fam
from linedecomp.linegraph import line_graph
from linedecomp.solvers import find_perfect_euler_set
from linedecomp.tours import etc_at_vertex_set, etc_everywhere, splice, tours_to_decomposition, validate_decomposition

K5 = fam.complete_graph(5)
D = tours_to_decomposition(K5, find_perfect_euler_set(K5).witness)

# Cut edge 01 of one K5 and edge 34 of another, then cross-connect the ends
ins = fam.insert_with_map(K5, K5.edge_between(0, 1), K5, K5.edge_between(3, 4), name="K5+K5")
Y = ins.Y
print(Y.name, Y.num_vertices, "vertices", Y.num_edges, "edges, degrees", Y.is_regular())
print("new edges:", ins.uu_edge, Y.endpoints(ins.uu_edge), ins.vv_edge, Y.endpoints(ins.vv_edge))

# Cycle i of each side joins up through the two new line vertices.
DY = splice(ins, D, D)
LY = line_graph(Y)
print(validate_decomposition(LY, DY))
print("compatible at new vertices:", etc_at_vertex_set(LY, DY, [ins.uu_edge, ins.vv_edge]))
print("compatible everywhere:", etc_everywhere(LY, DY))
for c in DY.canonical().cycles:
    print("  ", c)
