import json
import math
from pathlib import Path

import pytest

from thetadft import __version__
from thetadft.cli import RunConfig, main, render_json, run

GOLDEN = Path(__file__).parent / "golden" / "all_small.json"
GOLDEN_ARGS = ["all", "--identity", "NULL", "--identity", "LDNEVEN6", "--samples", "4",
               "--q-order", "40", "--n", "2-4", "--format", "json"]


def _close(a, b, path="$"):
    if isinstance(a, float) or isinstance(b, float):
        assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-300), path
    elif isinstance(a, dict):
        assert a.keys() == b.keys(), path
        for k in a:
            _close(a[k], b[k], f"{path}.{k}")
    elif isinstance(a, list):
        assert len(a) == len(b), path
        for i, (x, y) in enumerate(zip(a, b)):
            _close(x, y, f"{path}[{i}]")
    else:
        assert a == b, path


def _run_json(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--output", str(out)])
    return code, json.loads(out.read_text(encoding="utf-8"))


def test_golden_report(tmp_path):
    code, report = _run_json(GOLDEN_ARGS, tmp_path)
    assert code == 2  # LDNEVEN6 fails as printed
    _close(report, json.loads(GOLDEN.read_text(encoding="utf-8")))


def test_schema(tmp_path):
    _, report = _run_json(GOLDEN_ARGS, tmp_path)
    assert set(report) == {"version", "config", "results"}
    assert report["version"] == __version__
    for r in report["results"]:
        assert set(r) == {"name", "verdict", "metrics", "witnesses"}


def test_verify_null(tmp_path):
    code, report = _run_json(["verify", "--identity", "NULL", "--samples", "50", "--seed", "42", "--format", "json"], tmp_path)
    assert code == 0
    (r,) = report["results"]
    assert r["verdict"] == "PASS" and r["metrics"]["max_rel_residual"] <= 1e-9
    assert len(r["witnesses"]) == 50


def test_qcheck_names(tmp_path):
    code, report = _run_json(["qcheck", "--q-order", "50", "--format", "json"], tmp_path)
    assert code == 0
    names = [r["name"] for r in report["results"]]
    assert names == ["TRIPLE-PRODUCT", "ROGERS-RAMANUJAN", "SQUARE", "ODD-SQUARE", "TRIANGULAR"]
    rr = report["results"][1]
    assert rr["metrics"]["trace_verdict"] == "PASS"


def test_spectral_n4(tmp_path):
    code, report = _run_json(["spectral", "--n", "4", "--samples", "5", "--format", "json"], tmp_path)
    assert code == 0
    names = [r["name"] for r in report["results"]]
    assert names == ["MULT n=4", "EIGEN n=4 k=0", "EIGEN n=4 k=1", "EIGEN n=4 k=2"]
    assert report["results"][0]["metrics"]["analytic"] == [2, 1, 1, 0]


def test_text_format(capsys):
    code = main(["verify", "--identity", "NULL", "--identity", "C2", "--samples", "3"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:2] == ["NULL", "PASS"]
    assert lines[1].split()[:2] == ["C2", "PASS"]


def test_text_lists_failures(capsys):
    code = main(["verify", "--identity", "C4b-PRINTED", "--samples", "3"])
    assert code == 2
    assert "C4b-PRINTED: FAIL" in capsys.readouterr().out


def test_byte_identical(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    args = ["verify", "--samples", "3", "--format", "json"]
    main(args + ["--output", str(a)])
    main(args + ["--output", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_seed_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("THETADFT_SEED", "7")
    _, report = _run_json(["verify", "--identity", "P1", "--samples", "2", "--format", "json"], tmp_path)
    assert report["config"]["seed"] == 7
    _, report = _run_json(["verify", "--identity", "P1", "--samples", "2", "--seed", "3", "--format", "json"], tmp_path)
    assert report["config"]["seed"] == 3


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--identity", "NOPE"],
        ["verify", "--samples", "0"],
        ["verify", "--tol", "-1"],
        ["qcheck", "--q-order", "10"],
        ["verify", "--samples", "abc"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_one(args, capsys):
    try:
        code = main(args)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_unwritable_output(capsys):
    assert main(["qcheck", "--q-order", "40", "--output", "/nonexistent-dir/x.json"]) == 1


def test_run_api():
    status, report = run(RunConfig(command="qcheck", q_order=40))
    assert status == 0
    assert render_json(report) == render_json(run(RunConfig(command="qcheck", q_order=40))[1])
