"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``pytest -s``
or ``-v``, since output is written with capture disabled) and then asserts.
Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import time

import pytest

from linedecomp import families as fam
from linedecomp.graph import min_edge_cut
from linedecomp.linegraph import all_transitions, line_graph, separating_transitions
from linedecomp.pipelines import matching_avoiding_hub, theorem4_pipeline
from linedecomp.solvers import (
    EXHAUSTED,
    FOUND,
    SearchBudget,
    audit_theorem1,
    enumerate_perfect_euler_sets,
    find_hamilton_cycle,
    find_hamilton_decomposition,
    find_perfect_euler_set,
)
from linedecomp.tours import (
    NotCompatibleError,
    check_hamilton_cycle,
    cycle_to_tour,
    etc_at,
    etc_at_vertex_set,
    etc_everywhere,
    perfect_set_check,
    splice,
    tours_to_decomposition,
    validate_decomposition,
)


@pytest.fixture
def report(capsys):
    def _report(label, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {label}: {detail}")
        assert ok, detail

    return _report


def test_criterion_01_construction_fidelity(report):
    details, ok = [], True
    for k, n, m in [(3, 28, 42), (4, 44, 88)]:
        start = time.perf_counter()
        G = fam.build_X(k, 4).graph
        ts = all_transitions(G)
        sep = separating_transitions(G)
        elapsed = time.perf_counter() - start
        good = (
            G.num_vertices == n
            and G.num_edges == m
            and G.is_simple()
            and G.is_regular() == k
            and len(sep) == 0
            and (k != 3 or len(ts) == 84)
            and elapsed < 1.0
        )
        ok &= good
        details.append(f"X({k},4) {G.num_vertices}v {G.num_edges}e {len(ts)} transitions {len(sep)} separating {elapsed:.2f}s")
    report("criterion 1 construction fidelity", ok, "; ".join(details))


def test_criterion_02_structure_audit(report):
    start = time.perf_counter()
    results = {(k, t): audit_theorem1(fam.build_X(k, t)) for k, t in [(3, 4), (4, 4), (5, 6)]}
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results.values()) and elapsed < 10
    detail = ", ".join(f"X({k},{t}) {sum(c.passed for c in r.claims)}/{len(r.claims)}" for (k, t), r in results.items())
    report("criterion 2 structure audit", ok, f"{detail} in {elapsed:.2f}s")


def test_criterion_03_x34_non_hamiltonian(report):
    start = time.perf_counter()
    out = find_hamilton_cycle(fam.build_X(3, 4).graph, SearchBudget(wall_limit=60))
    elapsed = time.perf_counter() - start
    report(
        "criterion 3 X(3,4) non-hamiltonian",
        out.status == EXHAUSTED,
        f"{out.status} after {out.nodes_explored} nodes in {elapsed:.2f}s",
    )


def test_criterion_03_stretch_no_decomposition_of_line_graph(report):
    start = time.perf_counter()
    out = find_hamilton_decomposition(line_graph(fam.build_X(3, 4).graph), budget=SearchBudget(wall_limit=1800))
    elapsed = time.perf_counter() - start
    report(
        "criterion 3 stretch L(X(3,4)) has no Hamilton decomposition",
        out.status == EXHAUSTED,
        f"{out.status} after {out.nodes_explored} nodes in {elapsed:.2f}s",
    )


def test_criterion_04_worked_k4_cycle(report):
    K4 = fam.complete_graph(4)
    L = line_graph(K4)
    w, x, y, z = 0, 1, 2, 3
    e = K4.edge_between
    cycle = (e(w, z), e(w, x), e(w, y), e(y, z), e(x, y), e(x, z))
    valid = bool(check_hamilton_cycle(L, cycle))
    failing = [v for v in cycle if not etc_at(L, cycle, v)]
    try:
        cycle_to_tour(L, cycle)
        raised = False
    except NotCompatibleError:
        raised = True
    report(
        "criterion 4 worked cycle in L(K4)",
        valid and bool(failing) and raised,
        f"hamilton={valid}, incompatible at line vertices {failing}, cycle_to_tour raised={raised}",
    )


def test_criterion_05_perfect_tours_of_k5(report):
    K5 = fam.complete_graph(5)
    start = time.perf_counter()
    out = find_perfect_euler_set(K5, SearchBudget(wall_limit=60))
    elapsed = time.perf_counter() - start
    ok = out.status == FOUND and len(out.witness) == 3
    detail = f"{out.status} in {elapsed:.2f}s"
    if ok:
        covered = sum(len(T.edges) for T in out.witness)
        D = tours_to_decomposition(K5, out.witness)
        L = line_graph(K5)
        regular = L.num_vertices == 10 and {L.degree(v) for v in L.vertices} == {6}
        ok = bool(perfect_set_check(K5, out.witness)) and covered == 30 and regular
        ok = ok and len(D) == 3 and bool(validate_decomposition(L, D)) and etc_everywhere(L, D)
        detail += f", 3 tours covering {covered} transitions, L(K5) decomposition everywhere compatible"
    report("criterion 5 perfect Euler tours of K5", ok, detail)


def _constrained_complete(n, wall):
    K = fam.complete_graph(n)
    L = line_graph(K)
    matching = {K.edge_between(a, b) for a, b in matching_avoiding_hub(n)}
    required = [v for v in L.vertices if v not in matching]
    start = time.perf_counter()
    out = find_hamilton_decomposition(L, required, SearchBudget(wall_limit=wall))
    elapsed = time.perf_counter() - start
    ok = out.status == FOUND and bool(validate_decomposition(L, out.witness))
    ok = ok and etc_at_vertex_set(L, out.witness, required)
    return ok, f"{out.status} in {elapsed:.2f}s, compatible at {len(required)} non-matching vertices"


def test_criterion_06_matching_constrained_k4(report):
    ok, detail = _constrained_complete(4, 60)
    report("criterion 6 L(K4) compatible off a perfect matching", ok, detail)


def test_criterion_06_stretch_k6(report):
    ok, detail = _constrained_complete(6, 600)
    report("criterion 6 stretch L(K6) compatible off a perfect matching", ok, detail)


def test_criterion_07_theorem4_pipeline(report):
    start = time.perf_counter()
    run = theorem4_pipeline(4, SearchBudget(wall_limit=300))
    elapsed = time.perf_counter() - start
    G = run.family.graph
    L = line_graph(G)
    ok = (
        bool(run.certificate)
        and run.hamilton.status == EXHAUSTED
        and L.num_vertices == 40
        and {L.degree(v) for v in L.vertices} == {6}
        and len(run.decomposition) == 3
        and bool(run.validation)
        and elapsed < 600
    )
    report(
        "criterion 7 k=4 non-hamiltonian graph with decomposable line graph",
        ok,
        f"certificate {run.certificate}; hamilton {run.hamilton.status}; "
        f"{len(run.decomposition)} cycles on {L.num_vertices} line vertices {run.validation}; {elapsed:.2f}s",
    )


def _cubic_fixtures():
    return {
        "K4": fam.complete_graph(4),
        "K33": fam.complete_bipartite(3, 3),
        "petersen": fam.petersen_graph(),
        "prism": fam.prism_graph(3),
        "X(3,4)": fam.build_X(3, 4).graph,
        "bridged": fam.bridged_cubic_example(),
    }


def test_criterion_08_line_cut_tracks_separating_transitions(report):
    parts, ok = [], True
    for name, G in _cubic_fixtures().items():
        k = G.is_regular()
        size, _ = min_edge_cut(line_graph(G).as_multigraph())
        sep = len(separating_transitions(G))
        good = size == 2 * k - 2 if sep == 0 else size < 2 * k - 2
        ok &= good
        parts.append(f"{name} cut={size} sep={sep}")
    report("criterion 8 line graph edge connectivity tracks separating transitions", ok, ", ".join(parts))


def test_criterion_09_decomposability_matches_hamiltonicity(report):
    start = time.perf_counter()
    parts, ok = [], True
    for name, G in _cubic_fixtures().items():
        if name == "X(3,4)":
            continue
        ham = find_hamilton_cycle(G, SearchBudget(wall_limit=60)).status
        dec = find_hamilton_decomposition(line_graph(G), budget=SearchBudget(wall_limit=60)).status
        good = ham in (FOUND, EXHAUSTED) and dec in (FOUND, EXHAUSTED) and ham == dec
        ok &= good
        parts.append(f"{name} {ham}/{dec}")
    elapsed = time.perf_counter() - start
    report("criterion 9 decomposability of L(X) matches hamiltonicity of X", ok and elapsed < 300, ", ".join(parts) + f" in {elapsed:.2f}s")


def test_criterion_10_random_splices(report):
    K5 = fam.complete_graph(5)
    status, sets, _ = enumerate_perfect_euler_sets(K5, limit=200)
    decs = [tours_to_decomposition(K5, s) for s in sets]
    rng = random.Random(20260101)
    ok, fails = True, []
    for trial in range(25):
        DX, DXp = rng.choice(decs), rng.choice(decs)
        order = list(DXp.cycles)
        rng.shuffle(order)
        DXp = type(DXp)(tuple(order))
        uv, upvp = rng.choice(K5.edge_ids), rng.choice(K5.edge_ids)
        ins = fam.insert_with_map(K5, uv, K5, upvp)
        D = splice(ins, DX, DXp)
        LY = line_graph(ins.Y)
        others = [v for v in LY.vertices if v not in (ins.uu_edge, ins.vv_edge)]
        good = (
            bool(validate_decomposition(LY, D))
            and LY.num_vertices == 2 * K5.num_edges
            and all(len(c) == LY.num_vertices for c in D.cycles)
            and etc_at_vertex_set(LY, D, others)
        )
        if not good:
            fails.append(trial)
        ok &= good
    report("criterion 10 random splices of L(K5) decompositions", ok, f"25 pairings, failures {fails}")


def test_every_criterion_has_a_test():
    names = {n for n in globals() if n.startswith("test_criterion_")}
    numbers = {int(n.split("_")[2]) for n in names}
    assert numbers == set(range(1, 11))
