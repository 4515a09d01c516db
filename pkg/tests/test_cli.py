import json
import re

import pytest

from chargraph.cli import document_to_graph, graph_to_document, graph_to_dot, run
from chargraph.models import psl2_graph, suzuki_graph
from chargraph.search import sweep_models


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- graph documents ---


def test_json_round_trip_for_generated_graphs():
    for g in (psl2_graph(64), psl2_graph(11), suzuki_graph(1), psl2_graph(4)):
        doc = graph_to_document(g, {"model": "x"})
        parsed, metadata = document_to_graph(json.loads(json.dumps(doc)))
        assert parsed == g
        assert metadata == {"model": "x"}


def test_document_validation():
    with pytest.raises(Exception):
        document_to_graph({"vertices": "nope"})
    with pytest.raises(Exception):
        document_to_graph({"vertices": [2, 3], "edges": [[2]]})


def test_dot_output_shape():
    dot = graph_to_dot(psl2_graph(64))
    lines = dot.strip().splitlines()
    assert lines[0] == "graph primes {" and lines[-1] == "}"
    body = [line.strip() for line in lines[1:-1]]
    vertex_lines = [line for line in body if re.fullmatch(r"\d+;", line)]
    edge_lines = [line for line in body if re.fullmatch(r"\d+ -- \d+;", line)]
    assert len(vertex_lines) == 5 and len(edge_lines) == 2
    assert len(body) == len(vertex_lines) + len(edge_lines)
    assert vertex_lines == ["2;", "3;", "5;", "7;", "13;"]
    assert edge_lines == ["3 -- 7;", "5 -- 13;"]


# --- subcommands ---


def test_psl2_command_json(capsys):
    code, out, err = invoke(capsys, "psl2", "64", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3, 5, 7, 13]
    assert doc["edges"] == [[3, 7], [5, 13]]
    assert doc["metadata"]["components"] == [[2], [3, 7], [5, 13]]
    assert "PSL2(64)" in err


def test_quiet_suppresses_stderr(capsys):
    code, out, err = invoke(capsys, "--quiet", "psl2", "64")
    assert code == 0 and err == ""


def test_identical_invocations_are_byte_identical(capsys):
    _, out1, _ = invoke(capsys, "--quiet", "verify", "--suite", "--n", "5", "--alpha-max", "6")
    _, out2, _ = invoke(capsys, "--quiet", "verify", "--suite", "--n", "5", "--alpha-max", "6")
    assert out1 == out2
    _, out3, _ = invoke(capsys, "--quiet", "suzuki", "2", "--format", "dot")
    _, out4, _ = invoke(capsys, "--quiet", "suzuki", "2", "--format", "dot")
    assert out3 == out4


def test_degrees_command(tmp_path, capsys):
    path = tmp_path / "degrees.txt"
    path.write_text("# PSL2(7) degrees\n1\n3\n6\n\n7\n8  # largest\n")
    code, out, _ = invoke(capsys, "--quiet", "degrees", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3, 7]
    assert doc["edges"] == [[2, 3]]


def test_degrees_command_bad_line(tmp_path, capsys):
    path = tmp_path / "degrees.txt"
    path.write_text("1\nnope\n")
    code, _, err = invoke(capsys, "--quiet", "degrees", str(path))
    assert code == 2 and "not an integer" in err


def test_analyze_command(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    code, out, _ = invoke(capsys, "--quiet", "psl2", "64")
    graph_file.write_text(out)
    code, out, err = invoke(capsys, "analyze", "--n", "5", "--input", str(graph_file))
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] is True
    assert report["extremal_class"] == "MinExtremal"
    assert report["odd_cycle"] == [2, 3, 5, 7, 13]
    assert "n-exact" in err


def test_analyze_untagged_graph_never_claims_max_extremal(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    doc = graph_to_document(psl2_graph(64))
    graph_file.write_text(json.dumps(doc))
    _, out, _ = invoke(capsys, "--quiet", "analyze", "--n", "5", "--input", str(graph_file))
    assert json.loads(out)["extremal_class"] == "MinExtremal"


def test_search_command(capsys):
    code, out, _ = invoke(capsys, "--quiet", "search", "--n", "5", "--k", "n-3", "--alpha-max", "12")
    assert code == 0
    payload = json.loads(out)
    alphas = [r["alpha"] for r in payload["realizations"]]
    assert 6 in alphas
    assert payload["k_target"] == 2


def test_verify_command_passes(capsys):
    code, out, err = invoke(capsys, "verify", "--suite", "--n", "5", "--alpha-max", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True and payload["failures"] == 0
    assert any(r["check"] == "hamilton_characterization" for r in payload["records"])
    assert "PASS" in err


def test_verify_requires_suite(capsys):
    code, _, err = invoke(capsys, "verify")
    assert code == 2 and "--suite" in err


def test_export_command(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    _, out, _ = invoke(capsys, "--quiet", "psl2", "11")
    graph_file.write_text(out)
    code, dot, _ = invoke(capsys, "--quiet", "export", "--input", str(graph_file), "--format", "dot")
    assert code == 0 and dot.startswith("graph primes {")
    code, out2, _ = invoke(capsys, "--quiet", "export", "--input", str(graph_file), "--format", "json")
    assert code == 0 and json.loads(out2)["vertices"] == [2, 3, 5, 11]


# --- exit codes ---


def test_usage_error_exits_2(capsys):
    assert invoke(capsys, "analyze", "--n", "5")[0] == 2
    assert invoke(capsys, "unknown-command")[0] == 2


def test_bad_parameter_exits_2(capsys):
    code, _, err = invoke(capsys, "--quiet", "psl2", "12")
    assert code == 2 and "not a prime power" in err
    assert invoke(capsys, "--quiet", "psl2", "3")[0] == 2
    assert invoke(capsys, "--quiet", "suzuki", "0")[0] == 2


def test_range_error_exits_3(capsys):
    code, _, err = invoke(capsys, "--quiet", "search", "--n", "5", "--k", "n-3", "--alpha-max", "91")
    assert code == 3 and "alpha range" in err
    code, _, _ = invoke(capsys, "--quiet", "suzuki", "30")
    assert code == 3


def test_size_cap_exits_3(tmp_path, capsys):
    primes = [p for p in range(2, 160) if all(p % d for d in range(2, p))][:26]
    graph_file = tmp_path / "big.json"
    graph_file.write_text(json.dumps({"vertices": primes, "edges": []}))
    code, _, err = invoke(capsys, "--quiet", "analyze", "--n", "5", "--input", str(graph_file))
    assert code == 3 and "capped" in err


def test_missing_input_exits_2(capsys):
    assert invoke(capsys, "--quiet", "analyze", "--n", "5", "--input", "/nonexistent.json")[0] == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    # force a FAIL record through the sweep to check the exit path
    from chargraph import cli
    from chargraph.exactness import VerificationRecord

    def fake_sweep(n, alpha_range, solvable_shapes=None):
        return [VerificationRecord("order_bound", "forced failure", False, {"n": n})]

    monkeypatch.setattr(cli, "sweep_models", fake_sweep)
    code, out, err = invoke(capsys, "verify", "--suite", "--n", "5", "--alpha-max", "4")
    assert code == 1
    assert json.loads(out)["failures"] == 1
    assert "FAIL" in err
