import json
import subprocess
import sys

import pytest

from toroidal.cli import main
from toroidal.config import ConfigError, builtin_names, load_config


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, data, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


SL2 = {"algebra": {"type": "A1"}, "automorphisms": [{"builtin": "identity"}, {"builtin": "identity"}],
       "module": {"C0": 1, "W2": {"dynkin": [0]}}, "samples": {"jacobi": 54, "da": 20, "axioms": 54}}


def test_builtin_configs_load():
    assert {"sl2_untwisted", "sl3_twisted", "sl2_chevalley", "noncommuting", "sl3_z2"} <= set(builtin_names())
    cfg = load_config("sl3_twisted").with_overrides(seed=5, window="k=1,depth=1,height=1", cocycle="1,0")
    assert (cfg.seed, cfg.window.k, cfg.cocycle.c1, cfg.cocycle.c2) == (5, 1, 1, 0)
    with pytest.raises(ConfigError):
        load_config("sl3_twisted").with_overrides(window="k=two")


def test_verify_algebra_ok(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-algebra", "--config", "sl2_untwisted", "--out", str(tmp_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["ok"] and set(summary["reports"]) >= {"jacobi", "assumptions", "dA-equivariance"}
    assert json.loads((tmp_path / "jacobi.json").read_text())["ok"]


def test_chevalley_involution_fails(capsys):
    code, out, err = run(capsys, "verify-algebra", "--config", "sl2_chevalley")
    assert code == 1
    assert json.loads(out)["reports"]["assumptions"] == "fail"
    assert "(1) g(0,0) is simple" in err


def test_noncommuting_witness(capsys, tmp_path):
    code, _, _ = run(capsys, "verify-algebra", "--config", "noncommuting", "--out", str(tmp_path))
    assert code == 1
    rep = json.loads((tmp_path / "automorphisms.json").read_text())
    bad = [c for c in rep["checks"] if c["status"] == "fail"]
    assert bad[0]["clause"] == "sigma0, sigma1: commute" and bad[0]["witness"]["pair"] == [0, 1]


@pytest.mark.parametrize("args", [
    ["verify-algebra", "--config", "no-such-config"],
    ["verify-algebra", "--config", "sl2_untwisted", "--window", "k=1,depth"],
    ["verify-algebra", "--config", "sl2_untwisted", "--cocycle", "1"],
    ["frobnicate", "--config", "sl2_untwisted"],
    ["verify-modules"],
])
def test_usage_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_malformed_files(capsys, tmp_path):
    assert run(capsys, "verify-algebra", "--config", write(tmp_path, "{not json"))[0] == 2
    assert run(capsys, "verify-algebra", "--config", write(tmp_path, {"algebra": {"type": "A1"}}))[0] == 2
    bad_type = dict(SL2, algebra={"type": "E8"})
    assert run(capsys, "verify-algebra", "--config", write(tmp_path, bad_type))[0] == 2
    no_module = {k: v for k, v in SL2.items() if k != "module"}
    assert run(capsys, "verify-modules", "--config", write(tmp_path, no_module))[0] == 2


def test_window_cap_exit_code(capsys, tmp_path):
    cfg = dict(SL2, module={"C0": 1, "W2": {"dynkin": [-1]}}, cap=6)
    code, _, err = run(capsys, "verify-modules", "--config", write(tmp_path, cfg))
    assert code == 3 and "cap" in err


def test_verify_modules_sl3_twisted(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-modules", "--config", "sl3_twisted", "--out", str(tmp_path))
    assert code == 0
    verdicts = json.loads(out)["verdicts"]
    assert len(verdicts) == 5 and set(verdicts.values()) == {"pass"}
    chars = json.loads((tmp_path / "characters.json").read_text())
    assert chars["T'"] and chars["S'"]


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--config", "sl2_untwisted", "--kind", "tau0", "--window",
                       "k=1,depth=1,height=1")
    assert code == 0
    rows = json.loads(out)["symbols"]
    assert {r["class"] for r in rows} == {"MINUS", "ZERO", "PLUS"}
    assert all(r["weight"]["k0"] == 0 for r in rows)


def test_character_and_check_jacobi(capsys):
    code, out, _ = run(capsys, "character", "--config", "sl2_untwisted", "--window", "k=1,depth=1,height=1")
    assert code == 0
    data = json.loads(out)
    assert data["T'"] == data["S'"]
    code, out, _ = run(capsys, "check-jacobi", "--config", "sl3_twisted", "--cocycle", "2,-1")
    assert code == 0 and json.loads(out)["cocycle"] == ["2", "-1"]


def test_module_entry_point(tmp_path):
    cfg = write(tmp_path, dict(SL2, samples={"jacobi": 27, "da": 10}))
    proc = subprocess.run([sys.executable, "-m", "toroidal", "verify-algebra", "--config", cfg],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["ok"]
