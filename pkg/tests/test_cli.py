import json
import subprocess
import sys

import pytest

from resreg.cli import main

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_cocktail_json(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "cocktail:3", "--output", "json")
    d = json.loads(out)
    assert code == 0 and set(d) == {"graph", "profile", "spectrum", "bounds"}
    assert d["profile"]["label"] == {"kind": "ResistanceRegular", "k": "13/6"}
    assert len(d["bounds"]) == 10


def test_analyze_text_and_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "figure2")
    assert code == 0 and "ResistanceRegular(47/15)" in out and "KF_SPECTRAL_UPPER" in out
    code, out, _ = run(capsys, "analyze", "--family", "complete:3", "--output", "csv")
    assert out.splitlines() == ["0/1,2/3,2/3", "2/3,0/1,2/3", "2/3,2/3,0/1"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--family", "figure3")
    assert code == 0 and out.strip() == "figure3: Neither"
    code, out, _ = run(capsys, "classify", "--graph6", "C~", "--output", "json")
    assert json.loads(out)["label"] == {"kind": "ResistanceRegular", "k": "3/2"}


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--family", "complete:2", "--product", "double")
    # bits 101101 for 01,02,12,03,13,23
    assert code == 0 and out.strip() == "Cl"
    dest = tmp_path / "p3.txt"
    code, _, _ = run(capsys, "construct", "--family", "path:3", "--emit", "edgelist", "--out", str(dest))
    assert dest.read_text().splitlines()[:3] == ["n 3", "1 2", "2 3"]
    code, out, _ = run(capsys, "classify", "--input", str(dest))
    assert code == 0 and "Neither" in out


def test_verify_complete_prism(capsys):
    code, out, _ = run(capsys, "verify", "--family", "complete:4", "--product", "cartesian_k2")
    assert code == 0
    assert "closed form: 7/2^1, -1/3^3, -1/2^3, -1^1" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cycle:6", "--product", "lexicographic_k2",
                       "--output", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["product"].startswith("C6")
    assert {"CLOSED_FORM_SPECTRUM", "CLOSED_FORM_RESISTANCE"} <= {c["id"] for c in d["checks"]}


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cycle:5", "--tol", "1e-300")
    assert code == 1
    assert "FAIL  C5  EQUALITY_KF_LOWER" in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--input", str(DATA / "connected6.g6"), "--jobs", "2")
    assert code == 0
    assert "graphs     112" in out and "violations 0" in out and "mismatches 0" in out


def test_scan_names_graph_on_failure(capsys):
    code, out, _ = run(capsys, "scan", "--input", str(DATA / "connected3.g6"), "--tol", "1e-300")
    assert code == 1
    assert "connected3.g6:2 EQUALITY_" in out  # K3 is the second line


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--input", str(DATA / "connected4.g6"))
    assert code == 0 and out.count("PASS") == 6


def test_line_selection(capsys):
    code, out, _ = run(capsys, "classify", "--input", str(DATA / "connected3.g6"), "--line", "2")
    assert code == 0 and "ResistanceRegular(4/3)" in out
    code, _, err = run(capsys, "classify", "--input", str(DATA / "connected3.g6"), "--line", "9")
    assert code == 2 and "line 9" in err


def test_family_file(capsys, tmp_path):
    f = tmp_path / "fams"
    f.write_text("complete:3\ncycle:4\n")
    code, out, _ = run(capsys, "oracle-check", "--input", str(f), "--format", "family")
    assert code == 0 and out.count("PASS") == 2


@pytest.mark.parametrize("argv", [
    ["analyze"],                                             # no input
    ["analyze", "--family", "complete:3", "--graph6", "C~"],  # two inputs
    ["analyze", "--graph6", "C`"],                           # two disjoint edges
    ["analyze", "--family", "hypercube:3"],
    ["analyze", "--input", "/nonexistent.g6"],
    ["oracle-check", "--family", "complete:8"],              # over the enumeration budget
    ["scan", "--family", "complete:3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv", [["analyze", "--family", "complete:3", "--tol", "0"],
                                  ["scan", "--input", "x", "--jobs", "0"],
                                  ["bogus"]])
def test_argparse_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("RESIST_TOL", "1e-300")
    assert run(capsys, "verify", "--family", "cycle:5")[0] == 1
    assert run(capsys, "verify", "--family", "cycle:5", "--tol", "1e-8")[0] == 0
    monkeypatch.setenv("RESIST_TOL", "abc")
    assert run(capsys, "verify", "--family", "cycle:5")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "resreg", "classify", "--family", "complete:4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "K4: ResistanceRegular(3/2)"
