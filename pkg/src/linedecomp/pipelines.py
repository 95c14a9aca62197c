"""End-to-end runs of the two constructions."""

from __future__ import annotations

from dataclasses import dataclass

from .families import LabeledFamily, build_theorem4, build_X, complete_graph
from .graph import GraphError
from .linegraph import line_graph, separating_transitions
from .solvers import (
    FOUND,
    AuditReport,
    SearchBudget,
    SearchOutcome,
    audit_theorem1,
    certify_theorem4_nonhamiltonian,
    find_hamilton_cycle,
    find_hamilton_decomposition,
    find_perfect_euler_set,
)
from .tours import Check, Decomposition, splice, tours_to_decomposition, validate_decomposition


def matching_avoiding_hub(n: int) -> list[tuple[int, int]]:
    """Perfect matching of ``K_n`` (``n`` even) that avoids edges ``01``,
    ``02`` and ``03``: ``{0, n-1}`` plus consecutive pairs of ``1..n-2``."""
    if n % 2 or n < 4:
        raise GraphError("need an even order of at least 4")
    return [(0, n - 1)] + [(i, i + 1) for i in range(1, n - 1, 2)]


def complete_graph_decomposition(n: int, budget: SearchBudget | None = None) -> tuple[Decomposition, list[int]]:
    """Hamilton decomposition of ``L(K_n)`` compatible everywhere (odd ``n``)
    or everywhere off a perfect matching (even ``n``).

    Returns the decomposition and the line vertices where compatibility is
    not required (empty for odd ``n``).
    """
    K = complete_graph(n)
    if n % 2:
        out = find_perfect_euler_set(K, budget)
        if out.status != FOUND:
            raise GraphError(f"perfect tour search on K{n}: {out.status}")
        return tours_to_decomposition(K, out.witness), []
    L = line_graph(K)
    skip = [K.edge_between(a, b) for a, b in matching_avoiding_hub(n)]
    out = find_hamilton_decomposition(L, [e for e in L.vertices if e not in skip], budget)
    if out.status != FOUND:
        raise GraphError(f"constrained decomposition search on L(K{n}): {out.status}")
    return out.witness, skip


@dataclass(frozen=True)
class Theorem4Run:
    family: LabeledFamily
    certificate: Check
    hamilton: SearchOutcome | None
    base: Decomposition
    decomposition: Decomposition
    validation: Check

    @property
    def passed(self) -> bool:
        ham_ok = self.hamilton is None or self.hamilton.status == "exhausted"
        return bool(self.certificate) and ham_ok and bool(self.validation)


def theorem4_pipeline(k: int, budget: SearchBudget | None = None, search_hamilton: bool = True) -> Theorem4Run:
    """Build the non-Hamiltonian graph, certify it, and splice three copies of
    a compatible decomposition of ``L(K_{k+1})`` into a decomposition of its
    line graph."""
    F = build_theorem4(k)
    cert = certify_theorem4_nonhamiltonian(F)
    ham = find_hamilton_cycle(F.graph, budget) if search_hamilton else None
    base, _ = complete_graph_decomposition(k + 1, budget)
    D = base
    for ins in F.insertions:
        D = splice(ins, D, base)
    check = validate_decomposition(line_graph(F.graph), D)
    return Theorem4Run(F, cert, ham, base, D, check)


@dataclass(frozen=True)
class Theorem1Run:
    family: LabeledFamily
    separating: int
    audit: AuditReport
    hamilton: SearchOutcome | None


def theorem1_pipeline(k: int, t: int, budget: SearchBudget | None = None, search_hamilton: bool | None = None) -> Theorem1Run:
    """Build ``X_{k,t}``, count separating transitions, audit the cut
    structure, and (for cubic graphs, by default) search for a Hamilton
    cycle."""
    F = build_X(k, t)
    if search_hamilton is None:
        search_hamilton = k == 3
    ham = find_hamilton_cycle(F.graph, budget) if search_hamilton else None
    return Theorem1Run(F, len(separating_transitions(F.graph)), audit_theorem1(F), ham)

