import json

import pytest

import pyramond


def test_commands_listed():
    assert "report-all" in pyramond.commands()
    assert pyramond.schema_version == 1


def test_bracket_central_term():
    assert pyramond.bracket("T", "L_2", "L_-2") == "-4*L_0 + 1/2*C"
    assert pyramond.bracket("R", "G_1", "G_-1") == "-2*L_0 + 1/4*C"


def test_act_laurent():
    cfg = json.dumps({"family": "laurent", "alpha": "alpha", "b": "b"})
    assert pyramond.act("G_1", "xi*t^0", cfg) == "-t^1"


def test_run_orbit_report():
    code, text = pyramond.run("probe-orbit", json.dumps({"alpha": "1/2", "b": "1/3", "t-bound": 6}))
    report = json.loads(text)
    assert code == 0
    checks = report["body"]["sections"][0]["checks"]
    assert checks[0]["details"]["filled_inner"] == "true"
    assert len(report["footer"]["body_fnv1a64"]) == 16


def test_errors_map_to_exceptions():
    with pytest.raises(pyramond.ConfigError):
        pyramond.run("verify-module", json.dumps({"colour": "red"}))
    with pytest.raises(ValueError):
        pyramond.run("probe-orbit", "{}")
