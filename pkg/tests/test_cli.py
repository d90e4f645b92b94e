from __future__ import annotations

import json

import pytest

from imlab import cli
from imlab.graph6 import parse_graph6


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_graph6(capsys):
    code, out, _ = run(capsys, "invariants", "--graph6", "D??", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["alpha"] == 5 and rec["mu"] == 0


def test_invariants_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "invariants", "--format", "csv", stdin="Bw\nA_\n", monkeypatch=monkeypatch)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3 and lines[0].startswith("graph,n,m,alpha")


def test_family_then_verify(capsys, monkeypatch):
    code, out, _ = run(capsys, "family", "--gpqr", "2", "1", "3")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--check", "thm1", stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and "thm1_core bound=5 slack=0 equality=true" in out


def test_verify_json_has_no_floats(capsys):
    code, out, _ = run(capsys, "verify", "--graph6", "Dhc", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["regular_chain"][2] == "5/2"
    assert "2.5" not in out


def test_family_variants(capsys):
    _, out, _ = run(capsys, "family", "--kab", "2", "3")
    assert parse_graph6(out.strip()).m == 6
    _, out, _ = run(capsys, "family", "--random-regular", "10", "3", "--seed", "5", "--count", "3")
    assert len(out.split()) == 3 and all(parse_graph6(s).is_regular(3) for s in out.split())
    _, out, _ = run(capsys, "family", "--cubic", "8")
    assert len(out.split()) == 5


def test_hall_demo(capsys):
    code, out, _ = run(capsys, "hall-demo", "--graph6", "Gq{GOO")
    assert code == 0
    assert "orientation: saturate" in out and "Q (maximum matching" in out
    assert "|M| >= |A| - |X| + mu(G[N[X]]) = 5 - 3 + 1 = 3" in out


def test_hall_demo_json(capsys):
    code, out, _ = run(capsys, "hall-demo", "--graph6", "IheA@GUAo", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["monotonicity"]["holds"]
    assert all(a - b == m for a, b, m in d["ledger"])


def test_scan_exhaustive_small(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "scan", "--exhaustive", "--n-max", "4", "--format", "json",
                     "--output", str(out_path), "--witness-dir", str(tmp_path / "w"))
    d = json.loads(out_path.read_text())
    assert code == 0 and d["defects"] == [] and d["graphs_checked"] == 1 + 2 + 8 + 64
    assert (tmp_path / "w" / "problem2.g6").exists()


def test_scan_input_file_with_table(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("Bw\nDhc\n")
    table = tmp_path / "t.csv"
    code, out, _ = run(capsys, "scan", "--input", str(src), "--table", str(table))
    assert code == 0 and "defects: 0" in out
    assert len(table.read_text().splitlines()) == 3


def test_witnesses(capsys):
    code, out, _ = run(capsys, "witnesses", "--problem", "1", "--source", "cubic", "--n-max", "6")
    assert code == 0 and out.split() == ["Es\\o"]


def test_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("IMLAB_FORMAT", "json")
    _, out, _ = run(capsys, "invariants", "--graph6", "Bw")
    assert json.loads(out)["alpha"] == 1
    _, out, _ = run(capsys, "invariants", "--graph6", "Bw", "--format", "text")
    assert out.startswith("Bw n=3")


def test_usage_errors(capsys, tmp_path):
    assert cli.run(["bogus"]) == cli.EXIT_USAGE
    assert cli.run(["invariants", "--graph6", "Bw", "--input", "x"]) == cli.EXIT_USAGE
    assert cli.run(["scan", "--exhaustive", "--source", "cubic"]) == cli.EXIT_USAGE
    assert cli.run(["invariants", "--graph6", "Bw", "--budget-nodes", "0"]) == cli.EXIT_USAGE
    assert cli.run(["verify", "--graph6", "Bw", "--check", "nope"]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_bad_env_value_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("IMLAB_SEED", "abc")
    assert cli.run(["family", "--petersen"]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_io_and_parse_failures(capsys, tmp_path):
    assert cli.run(["invariants", "--input", str(tmp_path / "missing.g6")]) == 3
    assert cli.run(["invariants", "--graph6", "B!"]) == 3
    assert "byte" in capsys.readouterr().err


def test_budget_failure_exit_code(capsys):
    assert cli.run(["invariants", "--graph6", "IheA@GUAo", "--budget-nodes", "1"]) == 3
    assert "budget" in capsys.readouterr().err


def test_full_exhaustive_scan_exit_clean(capsys):
    code = cli.run(["scan", "--n-max", "6", "--exhaustive", "--check", "all"])
    out = capsys.readouterr().out
    assert code == 0 and "defects: 0" in out
