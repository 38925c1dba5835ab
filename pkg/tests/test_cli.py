from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from weylkit.cli import main
from weylkit.config import RunConfig
from weylkit.errors import InputError



def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    a2 = tmp_path / "a2.json"
    a2.write_text(json.dumps({"gcm": [[2, -1], [-1, 2]]}))
    p4 = tmp_path / "p4.json"
    p4.write_text(
        json.dumps(
            {
                "vertices": [{"name": n, "group": {"cyclic": 2}} for n in "abcd"],
                "edges": [["a", "b"], ["b", "c"], ["c", "d"]],
            }
        )
    )
    return tmp_path, a2, p4


def test_classify(capsys, files):
    _, a2, _ = files
    code, out, _ = run(capsys, "classify", str(a2))
    res = json.loads(out)
    assert code == 0 and res["type"] == "spherical" and res["indecomposable"]
    assert res["coxeter_matrix"] == [[1, 3], [3, 1]] and res["crystallographic"]


def test_roots_length_straight(capsys, files):
    _, a2, _ = files
    code, out, _ = run(capsys, "roots", str(a2), "--depth", "2")
    assert code == 0 and json.loads(out)["roots"] == [[1, 0], [0, 1], [1, 1]]
    code, out, _ = run(capsys, "length", str(a2), "--word", "1 2 1 2")
    assert code == 0 and json.loads(out) == {"word": "1 2 1 2", "length": 2, "reduced_word": "2 1"}
    code, out, _ = run(capsys, "straight", str(a2), "--word", "1 2", "--n", "2")
    assert code == 0 and json.loads(out)["verdict"] == "CertifiedNotStraight"


def test_gp_commands(capsys, files):
    tmp, _, p4 = files
    code, out, _ = run(capsys, "gp-normal", str(p4), "--word", "b a b")
    assert code == 0 and json.loads(out)["normal_form"] == [["a", 1]]
    code, out, _ = run(capsys, "gp-ball", str(p4), "--radius", "2", "--count-only")
    assert code == 0 and json.loads(out)["size"] == 14
    code, out, _ = run(capsys, "gp-hull", str(p4), "--seed", "", "--seed", "a b")
    assert code == 0 and json.loads(out)["size"] == 4
    code, out, _ = run(capsys, "gp-wpd", str(p4), "--h", "a b c d", "--D", "1", "--m", "1")
    res = json.loads(out)
    assert code == 0 and res["elements"] == [[]] and res["complete"]


def test_witness_then_verify(capsys, files):
    tmp, _, p4 = files
    cert = tmp / "c.json"
    code, out, _ = run(capsys, "witness", str(p4), "--out", str(cert))
    assert code == 0 and cert.read_text() == out
    assert json.loads(out)["verdict"] == "AcylindricallyHyperbolic"
    code, out, _ = run(capsys, "verify", str(cert), str(p4))
    assert code == 0 and json.loads(out) == {"ok": True, "discrepancies": []}
    # identical invocations give byte-identical artifacts
    again = tmp / "d.json"
    run(capsys, "witness", str(p4), "--out", str(again))
    assert again.read_bytes() == cert.read_bytes()


def test_verify_tampered_exit_1(capsys, files):
    tmp, _, p4 = files
    cert = tmp / "c.json"
    run(capsys, "witness", str(p4), "--out", str(cert))
    data = json.loads(cert.read_text())
    data["witness"]["word"] = data["witness"]["word"][:-1] + "1"
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(cert), str(p4))
    assert code == 1 and not json.loads(out)["ok"]


def test_witness_flags_recorded(capsys, files):
    _, _, p4 = files
    code, out, _ = run(capsys, "witness", str(p4), "--n-straight", "5", "--root-depth", "4", "--hull-window", "6")
    params = json.loads(out)["parameters"]
    assert code == 0 and (params["n_straight"], params["root_depth"], params["hull_window"]) == (5, 4, 6)


def test_domain_errors_exit_1(capsys, files):
    tmp, a2, p4 = files
    bad = tmp / "bad.json"
    bad.write_text(json.dumps({"gcm": [[2, 1], [1, 2]]}))
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 1 and json.loads(err)["error"] == "BadSign"
    code, _, err = run(capsys, "length", str(a2), "--word", "1 5")
    assert code == 1 and json.loads(err)["error"] == "BadGenerator"
    code, _, err = run(capsys, "classify", str(tmp / "missing.json"))
    assert code == 1 and json.loads(err)["error"] == "IoError"
    notjson = tmp / "x.json"
    notjson.write_text("{")
    code, _, err = run(capsys, "classify", str(notjson))
    assert code == 1 and json.loads(err)["error"] == "InputError"
    code, _, err = run(capsys, "gp-normal", str(p4), "--word", "z")
    assert code == 1 and json.loads(err)["error"] == "BadSyllable"


def test_usage_errors_exit_2(capsys, files):
    _, a2, _ = files
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "roots", str(a2))[0] == 2


def test_config_file(capsys, files):
    tmp, _, p4 = files
    cfg = tmp / "cfg.json"
    cfg.write_text(json.dumps({"n_straight": 3, "ball_cap": 10}))
    code, out, _ = run(capsys, "--config", str(cfg), "gp-ball", str(p4), "--radius", "1")
    assert code == 0 and json.loads(out)["size"] == 5
    code, _, err = run(capsys, "--config", str(cfg), "gp-ball", str(p4), "--radius", "3")
    assert code == 1 and json.loads(err)["error"] == "SearchBudgetExceeded"
    bad = tmp / "badcfg.json"
    bad.write_text(json.dumps({"ball_cap": 0}))
    code, _, err = run(capsys, "--config", str(bad), "gp-ball", str(p4), "--radius", "1")
    assert code == 1 and json.loads(err)["error"] == "InputError"


def test_run_config_round_trip():
    c = RunConfig(n_straight=5, k_power=3, out="x.json", verbosity=2)
    assert RunConfig.from_json(json.loads(json.dumps(c.to_json()))) == c
    with pytest.raises(InputError):
        RunConfig(root_cap=-1)
    with pytest.raises(InputError):
        RunConfig.from_json({"nope": 1})
    p = c.witness_parameters()
    assert (p.n_straight, p.k_power) == (5, 3)


@pytest.mark.skipif(shutil.which("weylkit") is None, reason="console script not installed")
def test_console_script(files):
    _, a2, _ = files
    ok = subprocess.run(["weylkit", "classify", str(a2)], capture_output=True, text=True)
    assert ok.returncode == 0 and json.loads(ok.stdout)["type"] == "spherical"
    bad = subprocess.run(["weylkit", "nope"], capture_output=True, text=True)
    assert bad.returncode == 2
    mod = subprocess.run([sys.executable, "-m", "weylkit", "classify", str(a2)], capture_output=True, text=True)
    assert mod.returncode == 0
