import json
import os
import subprocess

CLI = os.environ.get("RAMOND_CLI", "ramond")


def cli(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_verify_algebra_passes():
    r = cli("verify-algebra", "--algebra", "T", "--mode-bound", "3")
    assert r.returncode == 0
    assert json.loads(r.stdout)["body"]["status"] == "pass"


def test_orbit_examples():
    r = cli("probe-orbit", "--family", "laurent", "--alpha", "1/2", "--b", "1/3", "--seed", "t^0",
            "--t-bound", "6", "--mode-bound", "2")
    assert r.returncode == 0
    trivial = cli("probe-orbit", "--family", "laurent", "--alpha", "0", "--b", "0", "--seed", "t^0",
                  "--t-bound", "6", "--mode-bound", "2")
    assert trivial.returncode == 1
    orbit = json.loads(trivial.stdout)["body"]["sections"][0]["checks"][0]
    assert orbit["details"]["filled_inner"] == "false"
    assert orbit["details"]["span_dim"] == "1"


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"family": "omega", "lambda": "2", "b": "1/3", "aux-bound": 5,
                               "mode-bound": 2, "algebra": "T", "seed": "Dt^0"}))
    r = cli("probe-orbit", "--config", str(cfg))
    assert r.returncode == 0
    r = cli("probe-orbit", "--config", str(cfg), "--b", "symbolic")
    assert r.returncode == 2
    cfg.write_text(json.dumps({"family": "omega", "shape": "round"}))
    r = cli("verify-module", "--config", str(cfg))
    assert r.returncode == 2
    assert "unknown config key" in r.stderr


def test_report_all_selection_and_mutation(tmp_path):
    r = cli("report-all", "--select", "none")
    assert r.returncode == 0
    assert json.loads(r.stdout)["body"]["sections"] == []
    out = tmp_path / "r.json"
    r = cli("report-all", "--select", "1", "--mutate", "GG_C", "--output", str(out))
    assert r.returncode == 1
    assert json.loads(out.read_text())["body"]["sections"][0]["status"] == "fail"


def test_deterministic_body_across_thread_counts():
    env1 = dict(os.environ, RAMOND_THREADS="1")
    env2 = dict(os.environ, RAMOND_THREADS="3")
    args = ("probe-orbit", "--family", "degree-two", "--f", "t", "--b", "2", "--aux-bound", "1", "--t-bound", "5")
    a = json.loads(cli(*args, env=env1).stdout)
    b = json.loads(cli(*args, env=env2).stdout)
    assert a["body"] == b["body"]
    assert a["footer"]["body_fnv1a64"] == b["footer"]["body_fnv1a64"]


def test_bad_usage_exit_codes():
    assert cli().returncode == 2
    assert cli("verify-module", "--mode-bound", "x").returncode == 2
    assert cli("report-all", "--select", "12").returncode == 2
