"""Command line entry point: ``linedecomp <subcommand> ...``.

Exit codes: 0 success / found / verified, 1 verification failure or a
search that did not produce a requested witness, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families as fam
from .graph import FormatError, GraphError, MultiGraph, dumps, split_lines
from .linegraph import all_transitions, line_graph, separating_transitions
from .pipelines import theorem1_pipeline, theorem4_pipeline
from .solvers import (
    FOUND,
    SearchBudget,
    audit_theorem1,
    certify_theorem4_nonhamiltonian,
    dumps_outcome,
    find_hamilton_cycle,
    find_hamilton_decomposition,
    find_perfect_euler_set,
)
from .tours import (
    Certificate,
    Decomposition,
    dumps_decomposition,
    dumps_tours,
    etc_at,
    parse_certificate,
    perfect_set_check,
    splice,
    validate_decomposition,
)


class UsageError(Exception):
    pass


FAMILIES = {
    "complete": lambda a: fam.complete_graph(_need(a, "n")),
    "complete-minus-edge": lambda a: fam.complete_minus_edge(_need(a, "n"))[0],
    "ykt": lambda a: fam.build_Y(_need(a, "k"), _need(a, "t")),
    "xkt": lambda a: fam.build_X(_need(a, "k"), _need(a, "t")),
    "theorem4": lambda a: fam.build_theorem4(_need(a, "k")),
    "bridged-cubic": lambda a: fam.bridged_cubic_example(),
    "petersen": lambda a: fam.petersen_graph(),
    "prism": lambda a: fam.prism_graph(a.n or 3),
    "k33": lambda a: fam.complete_bipartite(3, 3),
    "star": lambda a: fam.star(_need(a, "n")),
    "cycle": lambda a: fam.cycle_graph(_need(a, "n")),
}


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for this family")
    return value


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> fam.LabeledFamily:
    return fam.loads_family(_read(path))


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.budget_nodes, wall_limit=args.budget_seconds)


def _etc_set(args, G: MultiGraph) -> list[int] | None:
    if getattr(args, "etc_all", False):
        return list(G.edge_ids)
    if getattr(args, "etc_except", None) is not None:
        skip = {int(x) for x in args.etc_except.split(",") if x}
        return [e for e in G.edge_ids if e not in skip]
    return None


# -- dot ---------------------------------------------------------------------

_COLOURS = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


def to_dot(F: fam.LabeledFamily, decomposition: Decomposition | None = None) -> str:
    G = F.graph
    if decomposition is not None:
        L = line_graph(G)
        colour = {}
        for i, cycle in enumerate(decomposition.cycles):
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                colour[L.edge_key(a, b)] = _COLOURS[i % len(_COLOURS)]
        lines = [f'graph "L({G.name})" {{']
        lines += [f"  {e};" for e in L.vertices]
        lines += [f'  {a} -- {b} [color={colour.get((a, b), "black")}];' for a, b in L.edges]
        return "\n".join(lines + ["}"]) + "\n"
    marked = set()
    if F.kind == "theorem4":
        marked = {e for pair in F.cut_sets.values() for e in pair}
    elif F.kind == "xkt":
        marked = set(F.special_edges.values())
    lines = [f'graph "{G.name}" {{']
    lines += [f"  {v};" for v in G.vertices]
    for e, a, b in G.edges:
        style = ' [color=red, penwidth=2, label="%d"]' % e if e in marked else ' [label="%d"]' % e
        lines.append(f"  {a} -- {b}{style};")
    return "\n".join(lines + ["}"]) + "\n"


# -- verification --------------------------------------------------------------


def verify_text(G: MultiGraph, text: str, etc_required: list[int] | None = None) -> tuple[bool, str]:
    """Check a certificate file against ``G``; returns (ok, message).

    Failure messages carry the line number of the offending entry.
    """
    try:
        lines = split_lines(text)
        first = 1
        if lines and lines[0].startswith("outcome"):
            head = lines[0].split(" ")
            if len(head) != 4 or head[1] != FOUND or head[2] != "nodes":
                return False, "line 1: outcome carries no witness"
            lines, first = lines[1:], 2
        cert = parse_certificate(lines, first)
    except FormatError as exc:
        return False, str(exc)
    if cert.graph_name != G.name:
        return False, f"line {first}: certificate is for graph {cert.graph_name!r}, not {G.name!r}"
    if cert.kind == "decomposition":
        return _verify_decomposition(G, cert, etc_required)
    if cert.kind == "eulertours":
        check = perfect_set_check(G, cert.payload)
        if check:
            return True, f"pass: perfect set of {len(cert.payload)} Euler tours"
        return False, f"line {_locate(check.reason, check.witness, first)}: {check}"
    return _verify_hamilton(G, cert)


def _locate(reason: str, witness, first: int) -> int:
    words = reason.split()
    if len(words) >= 2 and words[0] in ("cycle", "tour"):
        return first + int(words[1].rstrip(":"))
    if reason == "transition covered twice":
        return first + witness[2]
    return first


def _verify_decomposition(G, cert: Certificate, etc_required):
    if not G.is_simple():
        return False, f"line {cert.first_line}: line graph requires simple base"
    L = line_graph(G)
    D = cert.payload
    check = validate_decomposition(L, D)
    if not check:
        return False, f"line {_locate(check.reason, check.witness, cert.first_line)}: {check}"
    expected = L.degree(L.vertices[0]) // 2
    if len(D) != expected:
        return False, f"line {cert.first_line}: expected {expected} cycles, found {len(D)}"
    for i, cycle in enumerate(D.cycles, 1):
        for e in etc_required or ():
            if not etc_at(L, cycle, e):
                return False, f"line {cert.first_line + i}: not Euler tour compatible at {e}"
    note = " (Euler tour compatible where required)" if etc_required else ""
    return True, f"pass: Hamilton decomposition into {len(D)} cycles{note}"


def _verify_hamilton(G, cert: Certificate):
    cycle = cert.payload
    where = f"line {cert.first_line + 1}"
    if sorted(cycle) != sorted(G.vertices):
        return False, f"{where}: not a permutation of the vertices"
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if G.edge_between(a, b) is None:
            return False, f"{where}: {a} and {b} are not adjacent"
    return True, f"pass: Hamilton cycle on {len(cycle)} vertices"


# -- subcommands ---------------------------------------------------------------


def cmd_construct(args) -> int:
    built = FAMILIES[args.family](args)
    F = built if isinstance(built, fam.LabeledFamily) else fam.LabeledFamily(built, "plain", {})
    _emit(fam.dumps_family(F) if F.kind != "plain" else dumps(F.graph), args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(F), encoding="utf-8")
    return 0


def cmd_linegraph(args) -> int:
    G = _load_graph(args.graph).graph
    L = line_graph(G)
    if L.vertices != tuple(range(L.num_vertices)):
        raise UsageError("line graph export needs edge ids 0..m-1")
    LG = MultiGraph(L.vertices, tuple((i, a, b) for i, (a, b) in enumerate(L.edges)), f"L_{G.name}")
    _emit(dumps(LG), args.output)
    return 0


def cmd_transitions(args) -> int:
    G = _load_graph(args.graph).graph
    ts = separating_transitions(G) if args.separating else all_transitions(G)
    out = [str(t) for t in ts]
    out.append(f"{len(ts)} {'separating ' if args.separating else ''}transitions")
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_solve(args) -> int:
    F = _load_graph(args.graph)
    G = F.graph
    budget = _budget(args)
    if args.problem == "hamilton":
        outcome = find_hamilton_cycle(G, budget)
    elif args.problem == "decomposition":
        outcome = find_hamilton_decomposition(line_graph(G), _etc_set(args, G), budget)
    else:
        outcome = find_perfect_euler_set(G, budget)
    text = dumps_outcome(outcome, G.name)
    sys.stdout.write(text.splitlines(keepends=True)[0])
    if outcome.status == FOUND:
        body = "".join(text.splitlines(keepends=True)[1:])
        _emit(body, args.output)
        if args.dot and isinstance(outcome.witness, Decomposition):
            Path(args.dot).write_text(to_dot(F, outcome.witness), encoding="utf-8")
        return 0
    print(outcome.status, file=sys.stderr)
    return 1


def _load_decomposition(path: str) -> Decomposition:
    lines = split_lines(_read(path))
    first = 1
    if lines and lines[0].startswith("outcome"):
        lines, first = lines[1:], 2
    cert = parse_certificate(lines, first)
    if cert.kind != "decomposition":
        raise UsageError(f"{path} does not hold a decomposition")
    return cert.payload


def cmd_splice(args) -> int:
    X = _load_graph(args.host).graph
    Xp = _load_graph(args.inserted).graph
    ins = fam.insert_with_map(X, args.uv, Xp, args.upvp, name=args.name)
    D = splice(ins, _load_decomposition(args.host_cert), _load_decomposition(args.inserted_cert))
    check = validate_decomposition(line_graph(ins.Y), D)
    if args.output:
        Path(args.output).write_text(dumps(ins.Y), encoding="utf-8")
    _emit(dumps_decomposition(ins.Y.name, D), args.cert)
    if not check:
        print(f"spliced decomposition invalid: {check}", file=sys.stderr)
        return 1
    return 0


def cmd_audit(args) -> int:
    if args.theorem == "theorem1":
        F = _load_graph(args.graph) if args.graph else fam.build_X(_need(args, "k"), _need(args, "t"))
        report = audit_theorem1(F)
        print(report)
        return 0 if report.passed else 1
    F = fam.build_theorem4(_need(args, "k"))
    check = certify_theorem4_nonhamiltonian(F)
    print(f"{'PASS' if check else 'FAIL'} {check}")
    return 0 if check else 1


def cmd_verify(args) -> int:
    G = _load_graph(args.graph).graph
    ok, message = verify_text(G, _read(args.cert), _etc_set(args, G))
    print(message)
    return 0 if ok else 1


def cmd_export(args) -> int:
    F = _load_graph(args.graph)
    D = _load_decomposition(args.cert) if args.cert else None
    Path(args.dot).write_text(to_dot(F, D), encoding="utf-8")
    return 0


def cmd_pipeline(args) -> int:
    budget = _budget(args)
    out = Path(args.out_dir) if args.out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    if args.theorem == "theorem4":
        run = theorem4_pipeline(_need(args, "k"), budget)
        G = run.family.graph
        print(f"graph {G.name}: {G.num_vertices} vertices, {G.num_edges} edges, {G.is_regular()}-regular")
        print(f"non-hamiltonian certificate: {run.certificate}")
        print(f"hamilton search: {run.hamilton.status} ({run.hamilton.nodes_explored} nodes)")
        print(f"spliced decomposition: {len(run.decomposition)} cycles, {run.validation}")
        if out:
            (out / "graph.g").write_text(fam.dumps_family(run.family), encoding="utf-8")
            (out / "base.dec").write_text(dumps_decomposition(f"K{args.k + 1}", run.base), encoding="utf-8")
            (out / "graph.dec").write_text(dumps_decomposition(G.name, run.decomposition), encoding="utf-8")
        return 0 if run.passed else 1
    k, t = _need(args, "k"), args.t or fam.theorem_instance_t(args.k)
    run = theorem1_pipeline(k, t, budget)
    G = run.family.graph
    print(f"graph {G.name}: {G.num_vertices} vertices, {G.num_edges} edges, {G.is_regular()}-regular")
    print(f"{run.separating} separating transitions")
    print(run.audit)
    ok = run.separating == 0 and run.audit.passed
    if run.hamilton is not None:
        print(f"hamilton search: {run.hamilton.status} ({run.hamilton.nodes_explored} nodes)")
        ok = ok and run.hamilton.status == "exhausted"
    if out:
        (out / "graph.g").write_text(fam.dumps_family(run.family), encoding="utf-8")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linedecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def budget_opts(sp):
        sp.add_argument("--budget-nodes", type=int, default=10**12)
        sp.add_argument("--budget-seconds", type=float, default=3600.0)

    def etc_opts(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--etc-all", action="store_true", help="require compatibility at every line vertex")
        g.add_argument("--etc-except", metavar="IDS", help="comma-separated edge ids exempt from compatibility")

    sp = sub.add_parser("construct", help="build a named graph family")
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("-o", "--output")
    sp.add_argument("--dot")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("linegraph", help="write the line graph")
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_linegraph)

    sp = sub.add_parser("transitions", help="list (separating) transitions")
    sp.add_argument("graph")
    sp.add_argument("--separating", action="store_true")
    sp.set_defaults(func=cmd_transitions)

    sp = sub.add_parser("solve", help="exact search")
    sp.add_argument("problem", choices=["hamilton", "decomposition", "perfect-euler"])
    sp.add_argument("graph")
    sp.add_argument("-o", "--output", help="certificate path (default stdout)")
    sp.add_argument("--dot")
    etc_opts(sp)
    budget_opts(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("splice", help="splice two decompositions along an insertion")
    sp.add_argument("host")
    sp.add_argument("host_cert")
    sp.add_argument("uv", type=int)
    sp.add_argument("inserted")
    sp.add_argument("inserted_cert")
    sp.add_argument("upvp", type=int)
    sp.add_argument("-o", "--output", help="path for the inserted graph")
    sp.add_argument("--cert", help="path for the spliced decomposition (default stdout)")
    sp.add_argument("--name", default="Y")
    sp.set_defaults(func=cmd_splice)

    sp = sub.add_parser("audit", help="check the cut arguments of a construction")
    sp.add_argument("theorem", choices=["theorem1", "theorem4"])
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--graph", help="labelled X_{k,t} file to audit instead of building one")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("verify", help="check a certificate against a graph")
    sp.add_argument("graph")
    sp.add_argument("cert")
    etc_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write a DOT rendering")
    sp.add_argument("graph")
    sp.add_argument("--dot", required=True)
    sp.add_argument("--cert")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("pipeline", help="run a construction end to end")
    sp.add_argument("theorem", choices=["theorem1", "theorem4"])
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--out-dir")
    budget_opts(sp)
    sp.set_defaults(func=cmd_pipeline)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
