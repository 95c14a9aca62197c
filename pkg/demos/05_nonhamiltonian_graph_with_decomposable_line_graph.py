from linedecomp.linegraph import line_graph
from linedecomp.pipelines import theorem4_pipeline
from linedecomp.tours import etc_everywhere

# Three copies of K5 hung off K5 by 2-edge cuts: the graph itself has no
# Hamilton cycle, yet its line graph splits into 3 Hamilton cycles.
run = theorem4_pipeline(4)
G = run.family.graph
print(G.name, G.num_vertices, "vertices", G.num_edges, "edges")
print("2-edge cuts:", run.family.cut_sets)
print("proof check:", run.certificate)
print("search:", run.hamilton.status, run.hamilton.nodes_explored, "nodes")
print("line graph decomposition:", len(run.decomposition), "cycles,", run.validation)

# The spliced cycles stay compatible, so they come from Euler tours of G
print("compatible everywhere:", etc_everywhere(line_graph(G), run.decomposition))

# k = 5 needs a matching-constrained decomposition of L(K6) as the base
run5 = theorem4_pipeline(5)
print(run5.family.graph.name, run5.passed)
