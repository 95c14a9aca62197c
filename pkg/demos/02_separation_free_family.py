import time

from linedecomp import families as fam
from linedecomp.linegraph import all_transitions, line_graph, separating_transitions
from linedecomp.solvers import audit_theorem1, find_hamilton_cycle, find_hamilton_decomposition

# X_{3,4}: four hubs, each multi-edge of Y_{3,4} replaced by a copy of K4 minus an edge.
F = fam.build_X(3, 4)
G = F.graph
print(G.name, G.num_vertices, "vertices", G.num_edges, "edges", "regular of degree", G.is_regular())
print(len(all_transitions(G)), "transitions,", len(separating_transitions(G)), "separating")

# hub v_1 and the gadget hanging off its first edge
print("v_1 =", F.hub_vertices[1], "gadget X_1^1 =", sorted(F.gadgets[(1, 1)]))
print("E_1 =", sorted(F.cut_sets[1]))

# The cut structure behind the nonexistence argument, checked claim by claim
print(audit_theorem1(F))

# Exhaustive search agrees: no Hamilton cycle, and no Hamilton decomposition of L(X).
t0 = time.perf_counter()
print("hamilton:", find_hamilton_cycle(G).status)
out = find_hamilton_decomposition(line_graph(G))
print("decomposition of L(X):", out.status, out.nodes_explored, "nodes", f"{time.perf_counter() - t0:.2f}s")

# larger k only gets the audit
print(audit_theorem1(fam.build_X(5, 6)).passed)
