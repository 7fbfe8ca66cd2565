"""Command-line behavior: formats, exit codes, file output."""
import json
import subprocess
import sys

import pytest

from coordlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_json_exact_bytes(capsys):
    code, out, err = run(capsys, "gen", "--type", "D", "--n", "4", "--format", "json")
    assert code == 0
    assert out == '{"type":"D","n":4,"coeffs":["1","20","54","20","1"]}\n'
    assert err == ""


def test_gen_text_and_csv(capsys):
    code, out, _ = run(capsys, "gen", "--type", "A", "--n", "2")
    assert code == 0
    assert out == "type:A2\ndegree:2\ncoeffs:1 4 1\n"
    code, out, _ = run(capsys, "gen", "--type", "A", "--n", "2", "--format", "csv")
    assert out == "k,h_k\n0,1\n1,4\n2,1\n"


def test_gen_exceptional_through_recovery(capsys):
    code, out, _ = run(capsys, "gen", "--type", "G2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"type": "G2", "n": 2, "coeffs": ["1", "10", "7"]}


def test_analyze_text_fields(capsys):
    code, out, _ = run(capsys, "analyze", "--type", "B", "--n", "16")
    assert code == 0
    lines = out.splitlines()
    assert "real_rooted:false" in lines
    assert "distinct_real:14" in lines
    assert "log_concave:true" in lines


def test_analyze_expectation_failure_exits_one(capsys):
    code, out, _ = run(
        capsys, "analyze", "--type", "B", "--n", "16", "--expect", "real-rooted"
    )
    assert code == 1
    assert "expect_failed:real-rooted" in out.splitlines()


def test_analyze_expectation_holds(capsys):
    code, out, _ = run(
        capsys, "analyze", "--type", "A", "--n", "12", "--expect", "real-rooted"
    )
    assert code == 0
    assert "expect_failed" not in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--type", "D", "--n", "5", "--format", "json")
    obj = json.loads(out)
    assert obj["real_rooted"] is True
    assert obj["degree"] == 5
    assert obj["pf"]["holds"] is True


def test_roots_type_d_shows_brackets(capsys):
    code, out, _ = run(capsys, "roots", "--type", "D", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "type:D3"
    assert lines[1] == "distinct_real:3"
    assert sum(1 for l in lines if l.startswith("interval:")) == 3
    assert sum(1 for l in lines if l.startswith("bracket:j=")) == 3


def test_roots_rank_two_has_intervals_only(capsys):
    code, out, _ = run(capsys, "roots", "--type", "D", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for l in lines if l.startswith("interval:")) == 1
    assert not any(l.startswith("bracket:") for l in lines)


def test_roots_json_interval_width(capsys):
    from fractions import Fraction

    code, out, _ = run(
        capsys, "roots", "--type", "A", "--n", "2", "--format", "json",
        "--width", "1/4096",
    )
    obj = json.loads(out)
    assert len(obj["intervals"]) == 2
    for lo, hi in obj["intervals"]:
        assert Fraction(hi) - Fraction(lo) <= Fraction(1, 4096)


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "A", "--n", "2", "--K", "3", "--format", "csv")
    assert code == 0
    assert out == "k,S(k)\n0,1\n1,6\n2,12\n3,18\n"


def test_enumerate_json_counts_are_strings(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "G2", "--K", "4", "--format", "json")
    obj = json.loads(out)
    assert obj == {"type": "G2", "n": 2, "K": 4, "counts": ["1", "12", "30", "48", "66"]}


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--n", "2", "--K", "3")
    assert code == 0
    lines = out.splitlines()
    assert "census:[1, 6, 12, 18]" in lines
    assert "matched:true" in lines
    assert "legendre_identity:true" in lines


def test_verify_exceptional(capsys):
    code, out, _ = run(capsys, "verify", "--type", "F4", "--K", "4", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["matched"] is True
    assert obj["recovered"] == ["1", "44", "198", "140", "1"]


def test_report_csv(capsys):
    code, out, _ = run(capsys, "report", "--type", "D", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,degree,distinct_real,real_rooted,log_concave,unimodal,pf3"
    assert lines[1] == "2,2,1,true,true,true,true"
    assert lines[-1].startswith("4,4,4,true")


def test_report_parallel_matches_sequential(capsys, monkeypatch):
    code, seq, _ = run(capsys, "report", "--type", "A", "--n", "6", "--format", "csv")
    monkeypatch.setenv("COORDLAT_THREADS", "2")
    code2, par, _ = run(capsys, "report", "--type", "A", "--n", "6", "--format", "csv")
    assert code == code2 == 0
    assert seq == par


def test_out_writes_identical_bytes(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "gen", "--type", "C", "--n", "3", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    code2, stdout_version, _ = run(capsys, "gen", "--type", "C", "--n", "3", "--format", "json")
    assert target.read_text() == stdout_version


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "gen", "--type", "A")[0] == 2  # missing --n
    assert run(capsys, "gen", "--type", "Q", "--n", "3")[0] == 2
    assert run(capsys, "gen", "--type", "A", "--n", "0")[0] == 2
    assert run(capsys, "enumerate", "--type", "A", "--n", "2")[0] == 2  # missing --K
    assert run(capsys, "roots", "--type", "A", "--n", "2", "--width", "abc")[0] == 2
    assert run(capsys, "gen", "--type", "A", "--n", "2", "--bogus")[0] == 2
    assert run(capsys, "report", "--type", "G2")[0] == 2


def test_expensive_lattice_needs_flag(capsys):
    code, out, err = run(capsys, "enumerate", "--type", "E6", "--K", "1")
    assert code == 2
    assert "allow-expensive" in err
    code, out, _ = run(capsys, "enumerate", "--type", "E6", "--K", "1", "--allow-expensive")
    assert code == 0
    assert "S(1) = 72" in out


def test_memory_budget_exit(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "D", "--n", "4", "--K", "12", "--memory-budget", "0")
    assert code == 2
    assert "memory budget exceeded" in err


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "coordlat.cli", "gen", "--type", "D", "--n", "4", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"type":"D","n":4,"coeffs":["1","20","54","20","1"]}\n'
