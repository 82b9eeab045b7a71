from pathlib import Path

import pytest
import tomlkit

from omlkit.config import ConfigManager, OutputFormat, ToolkitSettings, get_settings, set_config_manager


def write_config(directory: Path, text: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "config.toml").write_text(text, encoding="utf-8")


def test_defaults_without_file(tmp_path):
    settings = ConfigManager(tmp_path, load_env_file=False).settings
    assert settings == ToolkitSettings()
    assert settings.born.tolerance == 1e-9
    assert settings.output.format == OutputFormat.TEXT
    assert settings.size_limit() == 1000


def test_file_values_are_loaded(tmp_path):
    write_config(tmp_path, "[born]\ntolerance = 1e-6\n\n[polytope]\nmax_events = 12\n")
    settings = ConfigManager(tmp_path, load_env_file=False).settings
    assert settings.born.tolerance == 1e-6
    assert settings.polytope.max_events == 12
    assert settings.rays.closure_cap == 10_000


def test_environment_overrides_file(tmp_path, monkeypatch):
    write_config(tmp_path, "[born]\ntolerance = 1e-6\n")
    monkeypatch.setenv("OMLKIT_TOL", "1e-4")
    monkeypatch.setenv("OMLKIT_FORMAT", "json")
    monkeypatch.setenv("DEBUG_MODE", "yes")
    settings = ConfigManager(tmp_path, load_env_file=False).settings
    assert settings.born.tolerance == 1e-4
    assert settings.output.format == OutputFormat.JSON
    assert settings.debug_mode is True


def test_unparseable_environment_value_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("OMLKIT_MAX_ELEMENTS", "lots")
    settings = ConfigManager(tmp_path, load_env_file=False).settings
    assert settings.lattice.max_elements == 1000


def test_overrides_win_over_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("OMLKIT_CLOSURE_CAP", "50")
    manager = ConfigManager(tmp_path, load_env_file=False)
    settings = manager.apply_overrides({"rays": {"closure_cap": 7}, "lattice": {"allow_large": True}})
    assert settings.rays.closure_cap == 7
    assert settings.size_limit() is None
    assert manager.settings is settings


def test_invalid_field_is_dropped_and_rest_kept(tmp_path):
    write_config(tmp_path, "[born]\ntolerance = -1.0\n\n[rays]\nclosure_cap = 99\n")
    settings = ConfigManager(tmp_path, load_env_file=False).settings
    assert settings.born.tolerance == 1e-9
    assert settings.rays.closure_cap == 99


def test_broken_toml_falls_back_to_defaults(tmp_path):
    write_config(tmp_path, "[born\ntolerance = ")
    assert ConfigManager(tmp_path, load_env_file=False).settings == ToolkitSettings()


def test_save_and_reload(tmp_path):
    manager = ConfigManager(tmp_path, load_env_file=False)
    assert manager.update_settings(states={"brute_force_limit": 12}, output={"indent": 0})
    doc = tomlkit.parse((tmp_path / "config.toml").read_text(encoding="utf-8"))
    assert doc["states"]["brute_force_limit"] == 12
    assert "log_file" not in doc

    reloaded = ConfigManager(tmp_path, load_env_file=False).settings
    assert reloaded.states.brute_force_limit == 12
    assert reloaded.output.indent == 0


def test_export_and_reset(tmp_path):
    manager = ConfigManager(tmp_path / "conf", load_env_file=False)
    assert manager.update_settings(rays={"closure_cap": 77})
    exported = tmp_path / "exported.toml"
    assert manager.export_config(exported)
    assert tomlkit.parse(exported.read_text(encoding="utf-8"))["rays"]["closure_cap"] == 77

    assert manager.reset_to_defaults() == ToolkitSettings()
    assert ConfigManager(tmp_path / "conf", load_env_file=False).settings.rays.closure_cap == 10000


def test_update_with_invalid_value_is_rejected(tmp_path):
    manager = ConfigManager(tmp_path, load_env_file=False)
    assert not manager.update_settings(lattice={"workers": 0})
    assert manager.settings.lattice.workers == 1


def test_log_file_expands_home():
    settings = ToolkitSettings(log_file="~/omlkit.log")
    assert settings.log_file == Path.home() / "omlkit.log"


def test_global_manager_is_replaceable(tmp_path):
    write_config(tmp_path, "[polytope]\nmax_events = 3\n")
    set_config_manager(ConfigManager(tmp_path, load_env_file=False))
    assert get_settings().polytope.max_events == 3


@pytest.mark.parametrize("value", ["text", "json", "dot"])
def test_output_formats(value):
    assert ToolkitSettings(output={"format": value}).output.format.value == value
