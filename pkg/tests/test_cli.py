import json
import math

import numpy as np
import pandas as pd
import pytest

from core.cli import InputFormatError, format_json, main, parse_grid, read_dataset, read_table
from core.configuration import config_centralizer


@pytest.fixture
def z_csv(tmp_path):
    path = tmp_path / "data.csv"
    values = np.random.default_rng(1).normal(0.5, 1.0, size=40)
    pd.DataFrame({"value": values}).to_csv(path, index=False)
    return str(path)


def run_cli(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_run_with_fixed_parameters(z_csv, capsys):
    argv = ["run", "--input", z_csv, "--test", "z", "--m", "5", "--alpha0", "0.1", "--seed", "7"]
    status, first, _ = run_cli(argv, capsys)
    assert status == 0
    record = json.loads(first)
    assert list(record) == [
        "z", "p_value", "reject", "m", "alpha0", "epsilon", "alpha", "seed", "n", "subtest_count_available"
    ]
    assert record["m"] == 5 and record["n"] == 40 and record["seed"] == 7
    assert run_cli(argv, capsys)[1] == first


def test_run_with_optimized_parameters(z_csv, capsys):
    argv = ["run", "--input", z_csv, "--test", "z", "--optimize", "--target-power", "0.8",
            "--effect-min", "0.2", "--effect-max", "2.0"]
    status, out, _ = run_cli(argv, capsys)
    assert status == 0
    assert 1 <= json.loads(out)["m"] <= 40


@pytest.mark.parametrize("extra", [
    ["--m", "5"],
    ["--m", "5", "--alpha0", "0.1", "--optimize", "--target-power", "0.8", "--effect-min", "0.1", "--effect-max", "1"],
    [],
])
def test_run_rejects_inconsistent_parameters(z_csv, extra, capsys):
    status, _, err = run_cli(["run", "--input", z_csv, "--test", "z", *extra], capsys)
    assert status == 1
    assert err.startswith("error:")


def test_run_rejects_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("x\n1\n2\n", encoding="utf-8")
    status, _, err = run_cli(["run", "--input", str(path), "--test", "z", "--m", "1", "--alpha0", "0.1"], capsys)
    assert status == 1 and "value" in err
    assert run_cli(["run", "--input", str(tmp_path / "missing.csv"), "--test", "z", "--m", "1", "--alpha0", "0.1"],
                   capsys)[0] == 1


def test_power_grid(tmp_path, capsys):
    output = tmp_path / "power.csv"
    status, _, _ = run_cli(["power", "--grid", "epsilon=1;alpha=0.05;m=5;alpha0=0.05;theta=0.05,0.8",
                            "--output", str(output)], capsys)
    assert status == 0
    table = read_table(str(output))
    assert len(table) == 2
    assert table.loc[0, "tot_power"] <= 0.05 + 1e-12
    assert table.loc[1, "tot_power"] > table.loc[0, "tot_power"]
    assert table["pb_power"].notna().all()
    assert table["canonne_bound"].isna().all()


def test_power_grid_from_effect_and_yaml(tmp_path, capsys):
    grid = tmp_path / "grid.yaml"
    grid.write_text("n: [100]\nepsilon: [1.0]\nalpha: [0.05]\nm: [4, 10]\nalpha0: [0.1]\neffect: [0.5]\n",
                    encoding="utf-8")
    output = tmp_path / "power.csv"
    assert run_cli(["power", "--test", "z", "--grid", str(grid), "--output", str(output)], capsys)[0] == 0
    table = read_table(str(output))
    assert list(table["m"]) == [4, 10]
    assert table["public_power"].between(0, 1).all()
    assert table["pb_power"].isna().all()


def test_multiplier_table(tmp_path, capsys):
    output = tmp_path / "multipliers.csv"
    status, _, _ = run_cli(["power", "--table-multipliers", "--epsilons", "1,0.1", "--output", str(output)], capsys)
    assert status == 0
    assert list(read_table(str(output))["m_tilde"]) == [5, 44, 6, 52]


def test_optimize_known_effect(tmp_path, capsys):
    output = tmp_path / "curve.csv"
    status, _, _ = run_cli(["optimize", "--test", "z", "--n-values", "20,30", "--mean", "0.65",
                            "--output", str(output)], capsys)
    assert status == 0
    table = read_table(str(output))
    assert list(table["n"]) == [20, 30]
    np.testing.assert_allclose(table["power_at_effect"], table["achieved_power"], atol=1e-12)


def test_simulate_synthetic_and_uniformity(tmp_path, capsys):
    output = tmp_path / "sim.csv"
    status, _, _ = run_cli(["simulate", "--theta", "0.5", "--m", "5", "--alpha0", "0.1",
                            "--replicates", "2000", "--output", str(output)], capsys)
    assert status == 0
    row = read_table(str(output)).iloc[0]
    assert row["engine"] == "tot" and row["replicates"] == 2000
    status, out, _ = run_cli(["simulate", "--engine", "public", "--test", "z", "--n", "10",
                              "--replicates", "2000", "--uniformity"], capsys)
    assert status == 0
    assert json.loads(out)["passed"] is True


def test_simulate_requires_configuration(capsys):
    assert run_cli(["simulate", "--theta", "0.5"], capsys)[0] == 1


def test_read_dataset_contracts(tmp_path):
    mvn = tmp_path / "mvn.csv"
    pd.DataFrame({"x2": [0.1, 0.2], "x1": [1.0, 2.0]}).to_csv(mvn, index=False)
    data = read_dataset(str(mvn), "mvn-mean")
    np.testing.assert_allclose(data.values[:, 0], [1.0, 2.0])
    gap = tmp_path / "gap.csv"
    pd.DataFrame({"x1": [0.1], "x3": [0.2]}).to_csv(gap, index=False)
    with pytest.raises(InputFormatError):
        read_dataset(str(gap), "mvn-mean")
    anova = tmp_path / "anova.csv"
    pd.DataFrame({"value": [1.0, 2.0]}).to_csv(anova, index=False)
    with pytest.raises(InputFormatError):
        read_dataset(str(anova), "anova")


def test_parse_grid_inline():
    points = parse_grid("m=1,3;alpha0=0.1,0.2")
    assert points == [
        {"m": 1.0, "alpha0": 0.1}, {"m": 1.0, "alpha0": 0.2},
        {"m": 3.0, "alpha0": 0.1}, {"m": 3.0, "alpha0": 0.2},
    ]
    with pytest.raises(InputFormatError):
        parse_grid("m=1;bogus=2", allowed=["m"])
    with pytest.raises(InputFormatError):
        parse_grid("m=abc")
    with pytest.raises(InputFormatError):
        parse_grid("")


def test_format_json():
    text = format_json({"a": 0.1, "b": math.nan, "c": True, "d": 3})
    assert text == '{"a": 0.10000000000000001, "b": null, "c": true, "d": 3}'


def test_invalid_configuration_stops_before_any_command(tmp_path, monkeypatch, capsys):
    global_dir = tmp_path / "global"
    global_dir.mkdir()
    (global_dir / "system.yaml").write_text(
        "system: {logging: {}, defaults: {alpha: 1.5}, execution: {}}\n", encoding="utf-8"
    )
    monkeypatch.setenv("TOT_CONFIG_DIR", str(tmp_path))
    monkeypatch.setattr(config_centralizer, "_default_manager", None)
    status, out, err = run_cli(["power", "--table-multipliers", "--epsilons", "1"], capsys)
    assert status == 2
    assert out == ""
    assert "Configuración inválida" in err
