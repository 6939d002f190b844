import json

import pytest

from nicecubic.cli import main
from nicecubic.catalog import k33
from nicecubic.graph6 import parse_graph6, write_graph6
from nicecubic.isomorphism import is_isomorphic


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("NICECUBIC_CACHE_DIR", str(tmp_path / "cache"))


def test_analyze_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    assert main(["analyze", "-"]) == 0
    out = capsys.readouterr().out
    assert "family        K4" in out


def test_analyze_json_mode(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(write_graph6(k33()) + "\n")
    assert main(["analyze", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["reports"][0]["nice_pairs"]["pair_count"] == 9


def test_analyze_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text("C~\nbroken\x01\n")
    assert main(["analyze", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_enumerate_to_file(tmp_path):
    out = tmp_path / "n6.g6"
    assert main(["enumerate", "--n", "6", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    graphs = [parse_graph6(line) for line in lines]
    assert any(is_isomorphic(g, k33()) for g in graphs)


def test_enumerate_odd_order_fails(capsys):
    assert main(["enumerate", "--n", "7"]) == 2
    assert "even" in capsys.readouterr().err


def test_verify_pass_and_exit_code(capsys):
    assert main(["verify", "--suite", "nine-nice-pairs", "--max-n", "6"]) == 0
    assert "[pass]" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(
        ["verify", "--suite", "nine-nice-pairs", "--max-n", "6", "--json"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "nice-count-bounds" in out
    assert "claim:" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "--suite", "nope", "--max-n", "6"]) == 2


def test_build_hdiamond(capsys):
    params = json.dumps({"quads": 1, "host": write_graph6(k33()), "host_edge": [0, 3]})
    assert main(["build", "--family", "Hdiamond", "--params", params]) == 0
    line = capsys.readouterr().out.strip()
    assert parse_graph6(line).n == 8


def test_build_family_mismatch(capsys):
    params = json.dumps({"family": "G1", "quads": 1})
    assert main(["build", "--family", "F", "--params", params]) == 2


def test_build_f_roundtrip(capsys, tmp_path):
    params = json.dumps(
        {
            "replacements": [
                {"edge": [0, 1], "quads": 1, "host": write_graph6(k33()), "host_edge": [0, 3]}
            ]
        }
    )
    out = tmp_path / "f1.g6"
    assert main(["build", "--family", "F", "--params", params, "--out", str(out)]) == 0
    g = parse_graph6(out.read_text().strip())
    assert g.n == 10 and g.is_cubic


def test_search_counterexample_runs(capsys):
    assert main(["search-counterexample", "--max-n", "8"]) == 0
    out = capsys.readouterr().out
    assert "barrier" in out or "no minimum" in out
