import json

import pytest

from workbench.cli import main
from workbench.scenarios import ConfigError, ScenarioConfig, parse_config, run_scenario


def test_parse_config_fields():
    cfg = parse_config("""
        # T case with explicit values
        case = t-case
        char = 0
        sigma_z = zeta6^1   # sixth root
        relators = z^6, x^6
        oracle_degree = 3
    """)
    assert cfg.case == "t-case"
    assert cfg.parameters == {"sigma_z": "zeta6^1"}
    assert cfg.quotient_relators() == ("z^6", "x^6")
    assert cfg.oracle_degree == 3


@pytest.mark.parametrize("text", [
    "char = 0",
    "case = nonsense",
    "case = t-case\nchar = 3",
    "case = t-case\nrho_h = -1",
    "case = t-case\nladder_max_m = five",
    "case = t-case\nthis line has no equals sign",
    "case = deg2-exclusion\nchar = 2",
])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_overrides_win():
    cfg = parse_config("case = gamma4-case\nchar = 0", characteristic=2)
    assert cfg.characteristic == 2


def test_defaults_come_from_solver():
    rep = run_scenario(ScenarioConfig("gamma4-case"))
    src = rep.data["parameter_source"]
    assert src["rho_eps"] == "solver" and src["rho_h"] == "default"
    assert rep.data["parameters"]["rho_eps"] == "zeta4^1"


def test_report_is_deterministic():
    a = run_scenario(ScenarioConfig("gamma4-case", oracle_degree=2)).dumps()
    b = run_scenario(ScenarioConfig("gamma4-case", oracle_degree=2)).dumps()
    assert a == b


def test_report_schema():
    rep = run_scenario(ScenarioConfig("t-case", oracle_degree=2)).to_json()
    for key in ("scenario", "quotient_order", "ladder_dims", "cartan", "groupoid", "roots", "hilbert", "bigraded", "checks"):
        assert key in rep
    assert rep["first_failure"] is None and rep["passed"]
    assert all(c["claim"] for c in rep["checks"])
    assert rep["hilbert"]["dimension"] == 80621568


def test_violated_conditions_report_first_failure():
    rep = run_scenario(parse_config("case = t-case\nrho_x1 = 1\nsigma_z = 1\noracle_degree = 2"))
    assert rep.first_failure().name == "X_1^{V,W} nonzero"
    assert rep.data["parameter_source"]["dropped"]


def test_gamma4_rho_eps_squared_one_fails_at_simplicity():
    rep = run_scenario(parse_config(
        "case = gamma4-case\nrho_eps = 1\nrho_g2 = 1\nsigma_eps2 = 1\nsigma_epsinv_h2 = 1\noracle_degree = 2"))
    assert rep.first_failure().name == "X_2^{W,V} absolutely simple"
    assert not rep.passed


def test_markdown_has_every_check():
    rep = run_scenario(ScenarioConfig("classification"))
    md = rep.markdown()
    assert md.count("| pass |") == len(rep.checks)


def test_cli_scenario_writes_reports(tmp_path, capsys):
    cfg = tmp_path / "g4.cfg"
    cfg.write_text("case = gamma4-case\n")
    out, md = tmp_path / "r.json", tmp_path / "r.md"
    code = main(["scenario", "gamma4-case", "--config", str(cfg), "--char", "2", "--oracle-degree", "2",
                 "--report", str(out), "--markdown", str(md)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["hilbert"]["dimension"] == 65536
    assert md.read_text().startswith("# Scenario gamma4-case")


def test_cli_failure_exit_code(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("rho_eps = 1\nrho_g2 = 1\nsigma_eps2 = 1\nsigma_epsinv_h2 = 1\n")
    assert main(["scenario", "gamma4-case", "--config", str(cfg), "--oracle-degree", "1"]) == 1


def test_cli_config_error_exit_code(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("case = t-case\n")
    assert main(["scenario", "gamma4-case", "--config", str(cfg)]) == 2
    assert main(["scenario", "t-case", "--config", str(tmp_path / "missing.cfg")]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_engine_error_exit_code(capsys):
    assert main(["group", "T", "--relators", "z^6", "--max-cosets", "200"]) == 2


def test_cli_subcommands(capsys):
    assert main(["group", "gamma4", "--relators", "a^4,b^4"]) == 0
    assert "order 64" in capsys.readouterr().out
    assert main(["quandle", "Z_2^{2,2}"]) == 0
    assert "orbits" in capsys.readouterr().out
    assert main(["ladder", "t-case"]) == 0
    assert "[4, 4, 1, 0]" in capsys.readouterr().out
    assert main(["hilbert", "gamma4-case", "--verify", "2"]) == 0
    assert "dimension 262144" in capsys.readouterr().out
    assert main(["hilbert", "t-case", "--display", "--char", "2"]) == 0
    assert "dimension 1259712" in capsys.readouterr().out
