"""Exact tools for Hamilton decompositions of line graphs of regular graphs."""

from .families import (
    Insertion,
    LabeledFamily,
    bridged_cubic_example,
    build_theorem4,
    build_X,
    build_Y,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    insert,
    insert_with_map,
    petersen_graph,
    prism_graph,
)
from .graph import FormatError, GraphError, MultiGraph, components, is_edge_cut, min_edge_cut
from .linegraph import LineGraph, Transition, all_transitions, line_graph, separating_transitions, split_at_transition, transitions_at
from .solvers import (
    SearchBudget,
    SearchOutcome,
    audit_theorem1,
    certify_theorem4_nonhamiltonian,
    find_hamilton_cycle,
    find_hamilton_decomposition,
    find_perfect_euler_set,
)
from .tours import (
    Decomposition,
    EulerTour,
    cycle_to_tour,
    etc_at,
    etc_at_vertex_set,
    etc_everywhere,
    perfect_set_check,
    splice,
    tour_to_cycle,
    validate_decomposition,
)

__version__ = "0.1.0"
