import pytest

from core.configuration import (
    ConfigManager,
    ConfigurationError,
    ConfigValidator,
    OptimizerSettings,
    PowerSettings,
    SimulationSettings,
    load_optimizer_settings,
    load_power_settings,
    load_simulation_settings,
    load_system_settings,
)
from core.exceptions import BaseTotException
from core.tot_engine import ToTConfigurationError


def write_system_yaml(root, text):
    global_dir = root / "global"
    global_dir.mkdir(parents=True)
    (global_dir / "system.yaml").write_text(text, encoding="utf-8")
    return ConfigManager(root)


def test_repository_configuration_matches_defaults():
    manager = ConfigManager()
    assert ConfigValidator(manager).validate() == []
    assert load_power_settings(manager) == PowerSettings()
    assert load_optimizer_settings(manager) == OptimizerSettings()
    assert load_simulation_settings(manager) == SimulationSettings()


def test_sections_override_defaults_and_expand_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("TOT_TEST_LEVEL", "DEBUG")
    manager = write_system_yaml(tmp_path, (
        "system:\n"
        "  logging:\n"
        "    level: ${TOT_TEST_LEVEL}\n"
        "optimizer:\n"
        "  coarse_grid_points: 8\n"
        "  alpha0_bounds: [0.001, 0.9]\n"
    ))
    assert load_system_settings(manager).log_level == "DEBUG"
    settings = load_optimizer_settings(manager)
    assert settings.coarse_grid_points == 8
    assert settings.alpha0_bounds == (0.001, 0.9)
    assert settings.effect_grid_length == 16


def test_missing_directory_falls_back_to_defaults(tmp_path):
    manager = ConfigManager(tmp_path / "nowhere")
    assert load_simulation_settings(manager) == SimulationSettings()
    assert ConfigValidator(manager).validate()


def test_invalid_yaml(tmp_path):
    manager = write_system_yaml(tmp_path, "power: [unclosed\n")
    with pytest.raises(ConfigurationError):
        manager.get_configuration("power")


def test_validator_reports_out_of_range_values(tmp_path):
    manager = write_system_yaml(tmp_path, (
        "system: {logging: {}, defaults: {alpha: 1.5}, execution: {}}\n"
        "power: {quantile_tolerance: 0, bracket_tail_width: 50, max_m_scan: 10}\n"
    ))
    issues = ConfigValidator(manager).validate()
    assert any("alpha" in issue for issue in issues)
    assert any("quantile_tolerance" in issue for issue in issues)
    with pytest.raises(ConfigurationError):
        ConfigValidator(manager).require_valid()


def test_exceptions_carry_component_and_context():
    error = ToTConfigurationError("m inválido", context={"m": 0})
    assert isinstance(error, BaseTotException) and isinstance(error, ValueError)
    assert str(error) == "m inválido | Componente: tot_engine | Contexto: m=0"
    assert error.to_dict()["context"] == {"m": 0}
