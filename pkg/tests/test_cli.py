import json

import pytest

from totalcoloring.cli import main
from totalcoloring.graphs import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_writes_graph_json(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, _, _ = run(capsys, "build", "--family", "poc", "--n", "10", "--k", "2",
                     "--out", str(path))
    assert code == 0
    G = Graph.from_json(path.read_text())
    assert G.n == 10 and G.max_degree() == 4


def test_color_matches_fixture(tmp_path, capsys):
    from pathlib import Path
    prefix = tmp_path / "c10"
    code, _, _ = run(capsys, "color", "--family", "poc", "--n", "10", "--k", "2",
                     "--method", "base", "--out-prefix", str(prefix))
    assert code == 0
    fixture = Path(__file__).parent / "fixtures" / "c10_2.csv"
    assert (tmp_path / "c10.matrix.csv").read_text() == fixture.read_text()


def test_color_verify_roundtrip(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "build", "--family", "unitary", "--n", "12", "--out", str(g))
    prefix = tmp_path / "u12"
    code, _, _ = run(capsys, "color", "--family", "unitary", "--n", "12",
                     "--out-prefix", str(prefix))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--graph", str(g),
                       "--coloring", str(tmp_path / "u12.coloring.json"))
    assert code == 0
    assert json.loads(out.strip())["valid"] is True


def test_verify_invalid_exits_4(tmp_path, capsys):
    g = tmp_path / "g.json"
    c = tmp_path / "c.json"
    g.write_text(Graph.from_edges(2, [(0, 1)]).to_json())
    c.write_text(json.dumps({"vertices": [1, 1], "edges": [[0, 1, 2]]}))
    code, out, _ = run(capsys, "verify", "--graph", str(g), "--coloring", str(c))
    assert code == 4
    doc = json.loads(out.strip())
    assert not doc["valid"] and doc["violation_count"] >= 1


def test_precondition_violation_exits_3(capsys):
    # poc base needs n = 2(2k+1)
    code, _, err = run(capsys, "color", "--family", "poc", "--n", "12",
                       "--method", "base")
    assert code == 3
    assert "error:" in err


def test_parse_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    # missing required family flag
    code, _, err = run(capsys, "color", "--family", "poc", "--method", "block")
    assert code == 2


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "poc", "--n", "7", "--k", "2")
    assert code == 0
    doc = json.loads(out.strip())
    assert doc["value"] == 6 and not doc["budget_hit"]


def test_oracle_budget_exit_5(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "complete", "--n", "8",
                       "--budget", "50")
    assert code == 5
    assert json.loads(out.strip())["budget_hit"] is True


def test_tcl_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("TCL_BUDGET", "50")
    code, out, _ = run(capsys, "oracle", "--family", "complete", "--n", "8")
    assert code == 5


def test_sweep_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(capsys, "sweep", "--nmax", "9", "--out", str(a))[0] == 0
    assert run(capsys, "sweep", "--nmax", "9", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "7,2,4,6,6,6,True" in a.read_text()


def test_export_roundtrip(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "build", "--family", "circulant", "--n", "8",
        "--distances", "1,3", "--out", str(g))
    d = tmp_path / "g.col"
    assert run(capsys, "export", "--in", str(g), "--to", "dimacs",
               "--out", str(d))[0] == 0
    back = tmp_path / "g2.json"
    assert run(capsys, "export", "--in", str(d), "--to", "graph-json",
               "--out", str(back))[0] == 0
    assert Graph.from_json(back.read_text()) == Graph.from_json(g.read_text())


def test_export_matrix_conversions(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "build", "--family", "poc", "--n", "10", "--k", "2",
        "--out", str(g))
    prefix = tmp_path / "c"
    run(capsys, "color", "--family", "poc", "--n", "10", "--k", "2",
        "--method", "base", "--out-prefix", str(prefix))
    cj = tmp_path / "from_matrix.json"
    assert run(capsys, "export", "--in", str(tmp_path / "c.matrix.csv"),
               "--to", "coloring-json", "--graph", str(g),
               "--out", str(cj))[0] == 0
    assert json.loads(cj.read_text()) == json.loads(
        (tmp_path / "c.coloring.json").read_text())


def test_mock_threshold_script_roundtrip(tmp_path, capsys):
    script_path = tmp_path / "s.json"
    g = tmp_path / "g.json"
    code, _, _ = run(capsys, "build", "--family", "mock-threshold",
                     "--random-n", "9", "--seed", "5", "--out", str(g),
                     "--emit-script", str(script_path))
    assert code == 0
    code, out, _ = run(capsys, "color", "--family", "mock-threshold",
                       "--script", str(script_path))
    assert code == 0
    envelope = json.loads(out.strip().splitlines()[-1])
    assert envelope["colors_used"] <= Graph.from_json(g.read_text()).max_degree() + 2
