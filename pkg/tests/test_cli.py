import json

import pytest

from isolation_kit.cli import run
from isolation_kit.graph import cycle_graph, path_graph, read_edge_list, write_edge_list


@pytest.fixture
def c6_file(tmp_path):
    path = tmp_path / "c6.txt"
    write_edge_list(cycle_graph(6), path)
    return str(path)


def test_bound(capsys):
    assert run(["bound", "--m", "9", "--k", "3"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert run(["bound", "--m", "-1", "--k", "3"]) == 2


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["bound", "--m", "x", "--k", "1"]) == 2
    assert run(["solve", "--pattern", "nonesuch", "--graph", "missing.txt"]) == 2


def test_special_pair_rejected(c6_file, capsys):
    assert run(["solve", "--pattern", "p3", "--graph", c6_file]) == 2
    assert "special pair: F=P3, G=C6" in capsys.readouterr().err


def test_special_pair_fallback(c6_file, capsys):
    assert run(["solve", "--pattern", "p3", "--graph", c6_file, "--fallback-exact"]) == 0
    out = capsys.readouterr().out
    assert "method: oracle" in out and "iota=2" in out


def test_solve_json(tmp_path, capsys):
    path = tmp_path / "p7.txt"
    write_edge_list(path_graph(7), path)
    assert run(["solve", "--pattern", "p3", "--graph", str(path), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["method"] == "proof" and payload["isolating"]
    assert payload["size"] <= payload["bound"] == 1
    assert payload["trace"] and all(step["case"] for step in payload["trace"])


def test_small_pattern_uses_oracle(c6_file, capsys):
    assert run(["solve", "--pattern", "k1", "--graph", c6_file]) == 0
    out = capsys.readouterr().out
    assert "method: oracle" in out and "size: 2" in out


def test_solve_exact(c6_file, capsys):
    assert run(["solve-exact", "--pattern", "p3", "--graph", c6_file]) == 0
    assert "iota=2" in capsys.readouterr().out


def test_bad_file_has_line_number(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n1 7\n")
    assert run(["solve-exact", "--pattern", "p3", "--graph", str(path)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_generate_special_round_trip(tmp_path, capsys):
    out = tmp_path / "special.txt"
    args = ["generate-special", "--pattern", "p3", "--m", "7", "--tree", "path", "--pure", "--out", str(out), "--check"]
    assert run(args) == 0
    G = read_edge_list(out)
    assert (G.n, G.m) == (8, 7)
    meta = json.loads(out.with_suffix(".json").read_text())
    assert meta["q"] == 2 and meta["pure"] and meta["verified"]
    assert run(["solve-exact", "--pattern", "p3", "--graph", str(out)]) == 0
    assert "iota=2" in capsys.readouterr().out


def test_generate_special_stdout_and_errors(capsys):
    assert run(["generate-special", "--pattern", "k3", "--m", "10"]) == 0
    assert capsys.readouterr().out.startswith("9 10\n")
    assert run(["generate-special", "--pattern", "k3", "--m", "10", "--pure"]) == 2


def test_verify_exit_codes(tmp_path, capsys):
    csv_path = tmp_path / "report.csv"
    assert run(["verify", "--pattern", "k3", "--exhaustive", "6", "--exact", "--out", str(csv_path), "--workers", "1"]) == 0
    assert "violations: 0" in capsys.readouterr().out
    summary = json.loads(csv_path.with_suffix(".json").read_text())
    assert summary["violations"] == 0 and summary["rows"] == 112
    assert run(["verify", "--pattern", "k3", "--n", "6", "--m", "4", "--count", "2"]) == 2
    assert run(["verify", "--pattern", "k3"]) == 2


def test_verify_reports_violations(monkeypatch, capsys):
    from isolation_kit import harness

    monkeypatch.setattr(harness, "bound", lambda m, k: -1)
    assert run(["verify", "--pattern", "k1", "--exhaustive", "3", "--workers", "1"]) == 1


def test_verify_fail_fast_invariant(monkeypatch, capsys):
    from isolation_kit import proof

    monkeypatch.setattr(proof, "bound", lambda m, k: 0)
    assert run(["verify", "--pattern", "p3", "--exhaustive", "4", "--fail-fast", "--workers", "1"]) == 3
    assert "proof invariant violated" in capsys.readouterr().err
    assert run(["verify", "--pattern", "p3", "--exhaustive", "4", "--workers", "1"]) == 1


def test_find_extremal_and_patterns(tmp_path, capsys):
    out = tmp_path / "ext.txt"
    assert run(["find-extremal", "--pattern", "k3", "--exhaustive", "4", "--min-n", "3", "--out", str(out)]) == 0
    assert "extremal graph(s)" in capsys.readouterr().out
    assert out.exists()
    assert run(["patterns"]) == 0
    listing = capsys.readouterr().out
    assert all(name in listing for name in ("k1", "p3", "paw", "k14"))
