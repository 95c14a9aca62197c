from linedecomp import families as fam
from linedecomp.linegraph import line_graph
from linedecomp.solvers import find_perfect_euler_set
from linedecomp.tours import (
    NotCompatibleError,
    check_hamilton_cycle,
    cycle_to_tour,
    etc_everywhere,
    etc_failures,
    perfect_set_check,
    tours_to_decomposition,
    validate_decomposition,
)

# Label K4 as w, x, y, z = 0, 1, 2, 3 and walk wz, wx, wy, yz, xy, xz in L(K4).
K4 = fam.complete_graph(4)
L = line_graph(K4)
w, x, y, z = range(4)
cycle = [K4.edge_between(a, b) for a, b in [(w, z), (w, x), (w, y), (y, z), (x, y), (x, z)]]
print("hamilton cycle of L(K4):", bool(check_hamilton_cycle(L, cycle)))

# At wx both neighbours of the cycle share w, so no Euler tour passes this way
print("incompatible at", etc_failures(L, cycle))
try:
    cycle_to_tour(L, cycle)
except NotCompatibleError as exc:
    print("cycle_to_tour:", exc)

# K5 has three Euler tours that use each of its 30 transitions once
K5 = fam.complete_graph(5)
out = find_perfect_euler_set(K5)
print(out.status, "after", out.nodes_explored, "nodes")
for T in out.witness:
    print("  tour", " ".join(f"{v}-[{e}]" for v, e in zip(T.vertices, T.edges)))
print(perfect_set_check(K5, out.witness))

# ...and those tours are the cycles of a compatible decomposition of L(K5)
D = tours_to_decomposition(K5, out.witness)
LK5 = line_graph(K5)
print(validate_decomposition(LK5, D), "compatible everywhere:", etc_everywhere(LK5, D))
