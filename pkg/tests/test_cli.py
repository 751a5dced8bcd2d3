import json
import subprocess
import sys

import pytest

from contractad_lab.cli import BUDGETS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--graph", "K2,2", "--what", "hp") == (0, "8\n", "")
    code, out, _ = run(capsys, "count", "--graph", "C4", "--what", "acyclic", "--format", "json")
    assert json.loads(out) == {"graph": "C4", "what": "acyclic", "value": 14}
    code, out, _ = run(capsys, "count", "--graph", "K4", "--what", "hc", "--pretty")
    assert out.strip() == "HC(K4) = 6"


def test_series(capsys):
    assert run(capsys, "series", "--name", "schroder", "--order", "6")[1] == "1,2,6,22,90,394\n"
    assert run(capsys, "series", "--name", "hertzsprung", "--order", "7")[1] == "1,0,0,2,14,90,646\n"
    out = run(capsys, "series", "--name", "cyclic-hertzsprung", "--order", "8")[1]
    assert out.strip().split(",")[4:] == ["2", "6", "46", "354"]
    out = run(capsys, "series", "--name", "fc-pe", "--order", "4", "--format", "json")[1]
    assert [c["num"] for c in json.loads(out)["coefficients"]] == [1, 2, 6, 24]


def test_verify_identities(capsys, tmp_path):
    code, out, err = run(capsys, "verify-identities", "--max-n", "4")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["command"] == "verify-identities" and "version" in report
    assert "elapsed" in err
    code, out, _ = run(capsys, "verify-identities", "--max-n", "3", "--identity", "perm", "--identity", "theorem5", "--pretty")
    assert "PASS" in out and code == 0


def test_verify_failure_exit_code(capsys, monkeypatch, tmp_path):
    from contractad_lab import graphic as F
    from contractad_lab.graph import complete

    monkeypatch.setattr(F, "HC", F.GraphicFunction("HC", lambda g: 5 if g == complete(3) else 0 if g.n > 1 else 1))
    dump = tmp_path / "ce.json"
    code, out, _ = run(capsys, "verify-identities", "--max-n", "3", "--identity", "hc-inverse", "--dump", str(dump))
    assert code == 1
    assert json.loads(dump.read_text())[0]["identity"] == "HC = w(CE)*HP"


def test_koszul_check(capsys, tmp_path):
    mats = tmp_path / "m.txt"
    code, out, _ = run(capsys, "koszul-check", "--graph", "K3", "--module", "cycham", "--dump-matrices", str(mats))
    report = json.loads(out)
    assert code == 0 and report["homology"] == [2, 0, 0]
    assert mats.read_text().splitlines()[0].count(" ") == 3
    code, out, _ = run(capsys, "koszul-check", "--graph", "P3", "--module", "ham")
    assert json.loads(out)["dims"] == [2, 8, 6]


def test_planeq_and_avoiders(capsys):
    assert run(capsys, "planeq", "--graph", "C5")[1] == "110\n"
    assert run(capsys, "planeq", "--graph", "P3", "--cyclic")[1] == "2\n"
    out = run(capsys, "planeq", "--graph", "P2", "--list")[1]
    assert json.loads(out) == [[0, 1], [1, 0]]
    assert run(capsys, "avoiders", "--n", "6", "--patterns", "2413,3142")[1] == "394\n"
    assert run(capsys, "avoiders", "--n", "5", "--patterns", "BC")[1] == "110\n"


def test_multipartite_and_young(capsys):
    code, out, _ = run(capsys, "multipartite", "--k", "2", "--lambda", "3,2", "--what", "hp", "--check")
    r = json.loads(out)
    assert code == 0 and r["value"] == r["brute_force"]
    code, out, _ = run(capsys, "young-series", "--f", "hc", "--max-weight", "4")
    r = json.loads(out)
    assert code == 0 and r["matches_closed_form"]
    code, out, _ = run(capsys, "young-series", "--f", "p", "--max-weight", "3", "--format", "csv")
    assert out.splitlines()[0] == "n,lambda,num,den"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["count", "--graph", "X9", "--what", "hp"],
        ["count", "--graph", "~P3", "--what", "hp"],  # disconnected
        ["count", "--graph", "P20", "--what", "hp"],  # over budget
        ["count", "--graph", "P3", "--what", "hp", "--budget", "nope=3"],
        ["series", "--name", "schroder", "--order", "40"],
        ["avoiders", "--n", "4", "--patterns", "2213"],
        ["verify-identities", "--jobs", "0"],
        ["count", "--graph", "P3"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_budget_override(capsys):
    code, _, err = run(capsys, "count", "--graph", "P5", "--what", "hp", "--budget", "count=4")
    assert code == 2 and "budget" in err
    code, out, _ = run(capsys, "count", "--graph", "P17", "--what", "hp", "--budget", "count=17")
    assert code == 0 and out == "2\n"
    assert BUDGETS["count"] == 16


def test_jobs_env_default(monkeypatch):
    from contractad_lab.cli import build_parser

    monkeypatch.setenv("CONTRACTAD_LAB_JOBS", "3")
    args = build_parser().parse_args(["verify-identities"])
    assert args.jobs == 3


def test_deterministic_output(capsys):
    a = run(capsys, "planeq", "--graph", "C4", "--list", "--cyclic")[1]
    b = run(capsys, "planeq", "--graph", "C4", "--list", "--cyclic")[1]
    assert a == b


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "contractad_lab", "count", "--graph", "P4", "--what", "hp"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout == "2\n"
