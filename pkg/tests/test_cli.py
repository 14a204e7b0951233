import json
import os

import numpy as np
import pytest

from permci.cli import main


def run_cli(args):
    return main(args)


def test_eval_bundled_code(tmp_path, capsys):
    out = tmp_path / "ev"
    assert run_cli(["eval", "--code", "bundled:two-pauli-n9",
                    "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "per channel use" in text
    payload = json.loads((tmp_path / "ev.json").read_text())
    assert payload["per_use"] == pytest.approx(1.2475e-4, rel=1e-4)
    csv = (tmp_path / "ev.csv").read_text().splitlines()
    assert csv[0].startswith("# permci-eval-v1")
    assert csv[1].split(",")[0] == "channel"


def test_eval_formula_override_and_snap_half(tmp_path):
    out = tmp_path / "ev2"
    assert run_cli(["eval", "--code", "bundled:bb84-n9", "--formula", "pure",
                    "--snap-half", "--out", str(out)]) == 0
    payload = json.loads((tmp_path / "ev2.json").read_text())
    assert payload["formula"] == "pure"


def test_eval_n_override(tmp_path):
    out = tmp_path / "ev3"
    assert run_cli(["eval", "--code", "bundled:two-pauli-n9", "--n", "12",
                    "--out", str(out)]) == 0
    payload = json.loads((tmp_path / "ev3.json").read_text())
    assert payload["n"] == 12
    assert payload["total"] > 0


def test_eval_explicit_channel_params(tmp_path):
    out = tmp_path / "ev4"
    assert run_cli(["eval", "--code", "bundled:two-pauli-n9",
                    "--channel", "two-pauli", "--params", "p=0.1",
                    "--out", str(out)]) == 0
    payload = json.loads((tmp_path / "ev4.json").read_text())
    assert payload["channel"]["params"]["p"] == 0.1


def test_optimize_writes_code_and_is_deterministic(tmp_path):
    args = ["optimize", "--channel", "two-pauli", "--params", "p=0.1",
            "--n", "2", "--ansatz", "pair", "--seed", "3",
            "--config", str(tmp_path / "cfg.yaml")]
    (tmp_path / "cfg.yaml").write_text(
        "swarm:\n  swarm_size: 12\n  max_iterations: 25\n")
    out1 = tmp_path / "o1"
    out2 = tmp_path / "o2"
    assert run_cli(args + ["--out", str(out1)]) == 0
    assert run_cli(args + ["--out", str(out2)]) == 0
    code1 = (tmp_path / "o1-code.json").read_bytes()
    code2 = (tmp_path / "o2-code.json").read_bytes()
    assert code1 == code2
    payload = json.loads((tmp_path / "o1.json").read_text())
    assert payload["objective"] == pytest.approx(payload["per_use"] * 2)


def test_optimize_seed_env_override(tmp_path, monkeypatch):
    (tmp_path / "cfg.yaml").write_text(
        "swarm:\n  swarm_size: 12\n  max_iterations: 10\n")
    args = ["optimize", "--channel", "two-pauli", "--params", "p=0.1",
            "--n", "2", "--ansatz", "pair", "--seed", "3",
            "--config", str(tmp_path / "cfg.yaml")]
    out1 = tmp_path / "e1"
    run_cli(args + ["--out", str(out1)])
    monkeypatch.setenv("PERMCI_SEED", "99")
    out2 = tmp_path / "e2"
    run_cli(args + ["--out", str(out2)])
    s1 = json.loads((tmp_path / "e1.json").read_text())["seed"]
    s2 = json.loads((tmp_path / "e2.json").read_text())["seed"]
    assert (s1, s2) == (3, 99)


def test_sweep_rows_and_thread_independence(tmp_path):
    base = ["sweep", "--channel", "two-pauli", "--code",
            "bundled:two-pauli-n9", "--sweep", "p=0.2:0.24:3",
            "--n-list", "2,3"]
    run_cli(base + ["--out", str(tmp_path / "s1")])
    run_cli(base + ["--threads", "2", "--out", str(tmp_path / "s2")])
    t1 = (tmp_path / "s1.csv").read_text()
    t2 = (tmp_path / "s2.csv").read_text()
    assert t1 == t2
    lines = t1.splitlines()
    assert lines[0] == "# permci-sweep-v1"
    assert len(lines) == 2 + 6  # comment + header + 3 noise values x 2 n
    first = lines[2].split(",")
    assert float(first[0]) == pytest.approx(0.2)
    assert int(first[1]) == 2


def test_simplex_small_grid(tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("swarm:\n  swarm_size: 10\n  max_iterations: 12\n"
                   "  stall_iterations: 6\n")
    out = tmp_path / "sx"
    assert run_cli(["simplex", "--exponent", "2", "--n-list", "2",
                    "--phi-list", "1.5707963267948966", "--seed", "0",
                    "--config", str(cfg), "--out", str(out)]) == 0
    lines = (tmp_path / "sx.csv").read_text().splitlines()
    assert lines[0] == "# permci-simplex-v1"
    assert len(lines) == 2 + 4  # 2x2 rays
    header = lines[1].split(",")
    assert header[:3] == ["i_theta", "i_phi", "q1"]


def test_oracle_check_quick(capsys):
    assert run_cli(["oracle-check", "--trials", "4", "--n-max", "3",
                    "--seed", "1"]) == 0
    text = capsys.readouterr().out
    assert "all checks passed" in text


def test_codes_listing_and_show(capsys, tmp_path):
    assert run_cli(["codes"]) == 0
    listing = capsys.readouterr().out
    assert "two-pauli-n9" in listing and "nn-damping-dephasing-k3" in listing
    assert run_cli(["codes", "two-pauli-n9", "--out",
                    str(tmp_path / "c.json")]) == 0
    assert (tmp_path / "c.json").exists()
    assert run_cli(["codes", "nn-damping-dephasing-k3"]) == 0
    shown = capsys.readouterr().out
    assert "ref_qubits" in shown


def test_missing_arguments_error():
    with pytest.raises(SystemExit):
        run_cli(["eval"])
    with pytest.raises(SystemExit):
        run_cli(["sweep", "--channel", "two-pauli"])
