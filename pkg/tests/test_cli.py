import random
import re

import pytest

from linedecomp import families as fam
from linedecomp.cli import main, verify_text
from linedecomp.graph import dumps


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_construct_and_separating_transitions(run, tmp_path):
    g = tmp_path / "x34.g"
    assert run("construct", "xkt", "--k", 3, "--t", 4, "-o", g)[0] == 0
    code, out, _ = run("transitions", g, "--separating")
    assert code == 0
    assert out.strip().endswith("0 separating transitions")
    code, out, _ = run("transitions", g)
    assert out.strip().endswith("84 transitions")


def test_bridged_cubic_has_separating_transitions(run, tmp_path):
    g = tmp_path / "b.g"
    run("construct", "bridged-cubic", "-o", g)
    code, out, _ = run("transitions", g, "--separating")
    assert code == 0 and not out.strip().endswith(" 0 separating transitions")
    assert out.startswith("transition ")


def test_solve_and_verify_perfect_euler(run, tmp_path):
    g, cert = tmp_path / "k5.g", tmp_path / "k5.tours"
    run("construct", "complete", "--n", 5, "-o", g)
    code, out, _ = run("solve", "perfect-euler", g, "-o", cert)
    assert code == 0 and out.startswith("outcome found nodes ")
    text = cert.read_text()
    assert text.startswith("eulertours K5 3\n") and text.count("\ntour ") == 3
    code, out, _ = run("verify", g, cert)
    assert code == 0 and out.startswith("pass")


def test_audit_theorem1(run):
    code, out, _ = run("audit", "theorem1", "--k", 3, "--t", 4)
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("19/19 claims pass")


def test_audit_theorem4(run):
    code, out, _ = run("audit", "theorem4", "--k", 4)
    assert code == 0 and out.startswith("PASS")


def test_solve_hamilton_petersen_exhausted(run, tmp_path):
    g = tmp_path / "p.g"
    run("construct", "petersen", "-o", g)
    code, out, err = run("solve", "hamilton", g)
    assert code == 1
    assert "exhausted" in out and "exhausted" in err


def test_solve_hamilton_found_and_verified(run, tmp_path):
    g, cert = tmp_path / "prism.g", tmp_path / "prism.ham"
    run("construct", "prism", "--n", 4, "-o", g)
    assert run("solve", "hamilton", g, "-o", cert)[0] == 0
    assert run("verify", g, cert)[0] == 0


def test_budget_exceeded_exit_code(run, tmp_path):
    g = tmp_path / "p.g"
    run("construct", "petersen", "-o", g)
    code, out, _ = run("solve", "hamilton", g, "--budget-nodes", 3)
    assert code == 1 and out.startswith("outcome budget_exceeded")


def test_solve_decomposition_with_etc_constraints(run, tmp_path):
    g, cert = tmp_path / "k4.g", tmp_path / "k4.dec"
    run("construct", "complete", "--n", 4, "-o", g)
    code, _, _ = run("solve", "decomposition", g, "--etc-except", "0,5", "-o", cert)
    assert code == 0
    assert run("verify", g, cert, "--etc-except", "0,5")[0] == 0
    # no decomposition of L(K4) is compatible everywhere
    code, out, _ = run("solve", "decomposition", g, "--etc-all")
    assert code == 1 and "exhausted" in out


def test_verify_rejects_incompatible_certificate(run, tmp_path):
    g, cert = tmp_path / "k4.g", tmp_path / "k4.dec"
    run("construct", "complete", "--n", 4, "-o", g)
    cert.write_text("decomposition K4 2\ncycle 1: 0 1 3 4 5 2\ncycle 2: 0 3 5 1 2 4\n")
    assert run("verify", g, cert)[0] == 0
    code, out, _ = run("verify", g, cert, "--etc-all")
    assert code == 1 and out.startswith("line 2:")


def test_splice_command(run, tmp_path):
    g, cert = tmp_path / "k5.g", tmp_path / "k5.dec"
    run("construct", "complete", "--n", 5, "-o", g)
    run("solve", "decomposition", g, "--etc-all", "-o", cert)
    y, ycert = tmp_path / "y.g", tmp_path / "y.dec"
    code, _, _ = run("splice", g, cert, 0, g, cert, 9, "-o", y, "--cert", ycert)
    assert code == 0
    assert run("verify", y, ycert, "--etc-all")[0] == 0


def test_export_dot(run, tmp_path):
    g, cert, dot = tmp_path / "k4.g", tmp_path / "k4.dec", tmp_path / "k4.dot"
    run("construct", "complete", "--n", 4, "-o", g)
    run("solve", "decomposition", g, "-o", cert)
    assert run("export", g, "--cert", cert, "--dot", dot)[0] == 0
    text = dot.read_text()
    assert text.startswith('graph "L(K4)" {') and "color=red" in text and "color=blue" in text
    tdot = tmp_path / "t4.dot"
    run("construct", "theorem4", "--k", 4, "-o", tmp_path / "t4.g", "--dot", tdot)
    assert tdot.read_text().count("penwidth=2") == 6


def test_linegraph_command(run, tmp_path):
    g = tmp_path / "k4.g"
    run("construct", "complete", "--n", 4, "-o", g)
    code, out, _ = run("linegraph", g)
    assert code == 0 and out.startswith("graph L_K4 6 12\n")


def test_pipeline_theorem4(run, tmp_path):
    code, out, _ = run("pipeline", "theorem4", "--k", 4, "--out-dir", tmp_path)
    assert code == 0
    assert "hamilton search: exhausted" in out
    assert "3 cycles, ok" in out
    assert run("verify", tmp_path / "graph.g", tmp_path / "graph.dec")[0] == 0


def test_pipeline_theorem1(run):
    code, out, _ = run("pipeline", "theorem1", "--k", 3)
    assert code == 0 and "0 separating transitions" in out and "hamilton search: exhausted" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "xkt", "--k", "3"],
        ["construct", "xkt", "--k", "3", "--t", "3"],
        ["construct", "star"],
        ["transitions", "/nonexistent/file.g"],
        ["solve", "perfect-euler", "GRAPH_K4"],
        ["solve", "decomposition", "GRAPH_PETERSEN_STAR"],
    ],
)
def test_usage_errors_exit_2(run, tmp_path, argv):
    (tmp_path / "k4.g").write_text(dumps(fam.complete_graph(4)))
    (tmp_path / "s.g").write_text(dumps(fam.star(4)))
    argv = [a.replace("GRAPH_K4", str(tmp_path / "k4.g")).replace("GRAPH_PETERSEN_STAR", str(tmp_path / "s.g")) for a in argv]
    code, _, err = run(*argv)
    assert code == 2 and err.startswith("error:")


def test_unknown_family_rejected(run):
    with pytest.raises(SystemExit) as info:
        run("construct", "nosuchfamily")
    assert info.value.code == 2


def test_malformed_graph_file(run, tmp_path):
    g = tmp_path / "bad.g"
    g.write_text("graph G 3 1\nedge 0 0 5\n")
    code, _, err = run("transitions", g)
    assert code == 2 and "line 2" in err


def test_byte_identical_output(run, tmp_path):
    outs = []
    for _ in range(2):
        g, cert = tmp_path / "k5.g", tmp_path / "k5.tours"
        run("construct", "complete", "--n", 5, "-o", g)
        code, out, _ = run("solve", "perfect-euler", g, "-o", cert)
        outs.append((g.read_bytes(), out, cert.read_bytes()))
    assert outs[0] == outs[1]


# -- fuzzing emitted certificates -------------------------------------------------


def _certificates(tmp_path, run):
    cases = []
    for fam_args, problem, extra in [
        (("complete", "--n", 5), "perfect-euler", ()),
        (("complete", "--n", 5), "decomposition", ("--etc-all",)),
        (("complete", "--n", 4), "decomposition", ()),
        (("prism", "--n", 4), "hamilton", ()),
    ]:
        g = tmp_path / f"{fam_args[0]}{fam_args[-1]}.g"
        run("construct", *fam_args, "-o", g)
        cert = tmp_path / f"{fam_args[0]}{fam_args[-1]}.{problem}"
        assert run("solve", problem, g, *extra, "-o", cert)[0] == 0
        cases.append((g, cert))
    return cases


def _mutations(text, rng, count):
    lines = text.splitlines()
    positions = [(i, j) for i, line in enumerate(lines) for j, _ in enumerate(line.split(" "))]
    out = []
    for i, j in rng.sample(positions, min(count, len(positions))):
        tokens = lines[i].split(" ")
        old = tokens[j]
        if old.isdigit():
            choices = [str(int(old) + 1), str(max(int(old) - 1, 0) if old != "0" else 1), "x", "-1"]
        else:
            choices = [old + "x", "", old.upper() + "_"]
        new = rng.choice([c for c in choices if c != old])
        mutated = lines[:i] + [" ".join(tokens[:j] + [new] + tokens[j + 1:])] + lines[i + 1:]
        out.append(("\n".join(mutated) + "\n", i + 1))
    return out


def test_emitted_certificates_verify_and_mutants_are_rejected(run, tmp_path):
    from linedecomp.graph import loads

    rng = random.Random(2024)
    for g, cert in _certificates(tmp_path, run):
        G = loads(g.read_text())
        text = cert.read_text()
        assert verify_text(G, text)[0]
        for mutated, lineno in _mutations(text, rng, 60):
            ok, message = verify_text(G, mutated)
            assert not ok, (cert.name, mutated)
            assert re.match(r"line \d+: ", message), message
            assert 1 <= int(message.split()[1].rstrip(":")) <= len(text.splitlines())
