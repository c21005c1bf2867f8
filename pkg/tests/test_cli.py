"""Command-line driver: suites, reports, exit codes, determinism."""

import json

import pytest

from harmstab.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_main_suite_degree_2(capsys):
    code, out = run_cli(
        capsys, ["verify", "--suite", "main", "--max-degree", "2", "--format", "json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"]
    summaries = [c["inputs"] for c in report["checks"]]
    assert summaries == ["d=1 dims=(2,2)", "d=2 dims=(0,0)"]


def test_kerh_suite_seeded(capsys):
    code, out = run_cli(
        capsys,
        ["verify", "--suite", "kerh", "--max-degree", "6", "--seed", "1"],
    )
    assert code == 0
    assert "PASS kernel-image-exactness" in out


def test_invalid_max_degree_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "main", "--max-degree", "0"])
    assert exc.value.code == 2


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_reports_are_deterministic(capsys):
    argv = [
        "verify", "--suite", "bracket", "--max-degree", "4",
        "--seed", "9", "--format", "json",
    ]
    _, first = run_cli(capsys, argv)
    _, second = run_cli(capsys, argv)
    assert first == second


def test_dims_csv(capsys):
    code, out = run_cli(capsys, ["dims", "--max-degree", "3", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "degree,dim_lie,dim_stab_w,dim_stab_m,equal"
    assert lines[1] == "1,2,2,2,true"
    assert lines[2] == "2,1,0,0,true"
    assert lines[3] == "3,2,1,1,true"


def test_stab_verb_json(capsys):
    code, out = run_cli(capsys, ["stab", "--coproduct", "M", "--degree", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["degree"] == 2
    assert report["dim"] == 0
    assert report["coproduct"] == "M"


def test_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SHUFFLE_STAB_THREADS", "2")
    code, out = run_cli(capsys, ["dims", "--max-degree", "3", "--format", "csv"])
    assert code == 0
    assert out.strip().split("\n")[1] == "1,2,2,2,true"
