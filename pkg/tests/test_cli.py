from __future__ import annotations

import json
import subprocess
import sys

import pytest

from wreathvo.cli import main


def test_chartable_s3(tmp_path, capsys):
    out = tmp_path / "s3.json"
    assert main(["chartable", "--group", "trivial", "--n", "3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert set(data) == {"group", "n", "rows", "cols", "Z", "values"}
    assert data["values"] == [["1", "1", "1"], ["-1", "0", "2"], ["1", "-1", "1"]]
    assert data["cols"] == ["c0:[3]", "c0:[2,1]", "c0:[1,1,1]"]
    assert data["Z"] == [3, 2, 6]
    csv_text = (tmp_path / "s3.csv").read_text()
    assert csv_text.splitlines()[1] == "Z,3,2,6"


def test_chartable_small_cases(capsys):
    assert main(["chartable", "--group", "trivial", "--n", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == [["1"]]
    assert main(["chartable", "--group", "cyclic:2", "--n", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7  # header, Z row, five characters


def test_chartable_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["chartable", "--group", "cyclic:3", "--n", "2", "--out", str(a), "--seed", "4"]) == 0
    assert main(["chartable", "--group", "cyclic:3", "--n", "2", "--out", str(b), "--seed", "4"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify", "clifford", "--group", "trivial", "--modes", "5/2", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("spec,label", [("bd:8", "affine D4"), ("cyclic:2", "affine A1"), ("bi", "affine E8")])
def test_mckay_command(spec, label, capsys):
    assert main(["mckay", "--group", spec]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["label"] == label
    if spec == "cyclic:2":
        assert data["cartan"] == [[2, -2], [-2, 2]]


@pytest.mark.parametrize("suite,args", [
    ("isometry", ["--group", "cyclic:3", "--n", "3"]),
    ("ope", ["--group", "cyclic:2", "--xi", "mckay", "--degree", "2"]),
    ("clifford", ["--group", "trivial", "--modes", "5/2"]),
    ("genfun", ["--group", "cyclic:2", "--n", "3"]),
    ("schur", ["--group", "cyclic:2", "--degree", "2"]),
])
def test_verify_suites(suite, args, capsys):
    assert main(["verify", suite] + args) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"]


def test_fock_command(capsys):
    assert main(["fock", "--group", "cyclic:2", "--xi", "mckay", "e^(0,1)", "--apply", "a[0](g0)"]) == 0
    assert json.loads(capsys.readouterr().out)["vector"] == "(-2) 1 e^(0,1)"
    code = main([
        "fock", "--group", "cyclic:2", "1", "--apply", "X[-1/2](1,0)", "--apply", "X[-3/2](0,1)",
        "--pair", "(1) a[-1](g1)^1 e^(1,1)", "--format", "pretty",
    ])
    assert code == 0
    assert capsys.readouterr().out.splitlines()[-1] == "-1"


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main(["mckay", "--group", "nonsense"]) == 2
    assert main(["chartable", "--group", "cyclic:2", "--xi", "mckay"]) == 2
    assert main(["fock", "--group", "cyclic:2", "1", "--apply", "X[1](1,0)"]) == 2
    assert main(["fock", "--group", "cyclic:2", "(1) 1 e^(0)"]) == 2
    assert main(["verify", "ope", "--degree", "abc"]) == 2


def test_verification_failure_exit_code(monkeypatch, capsys):
    from wreathvo import suites
    from wreathvo.groups import Report

    monkeypatch.setattr(suites, "suite_mckay", lambda: Report("mckay", False, []))
    assert main(["verify", "mckay"]) == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "wreathvo", "mckay", "--group", "cyclic:3", "--format", "pretty"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "affine A2" in out.stdout
