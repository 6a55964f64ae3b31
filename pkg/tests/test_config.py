"""
Tests for configuration loading and validation.
"""

import pytest

from src.config.settings import (
    AppConfig, ConfigManager, LoggingConfig, ModelCapsConfig, validate_config, with_caps,
)
from src.errors import ConfigError


class TestConfigManager:
    """Test cases for ConfigManager."""

    def setup_method(self):
        """Set up test fixtures."""
        self.defaults = AppConfig()

    def test_missing_file_gives_defaults(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        config = ConfigManager(str(tmp_path / "absent.yaml")).load_config()
        assert config == self.defaults
        assert config.models.max_arbitrary_size == 4
        assert config.models.max_strict_size == 5
        assert config.decision.max_events == 3

    def test_yaml_values_applied(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = tmp_path / "config.yaml"
        path.write_text("models:\n  max_arbitrary_size: 3\nlogging:\n  level: DEBUG\n")
        config = ConfigManager(str(path)).load_config()
        assert config.models.max_arbitrary_size == 3
        assert config.logging.level == "DEBUG"
        assert config.models.max_strict_size == 5

    def test_environment_overrides(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("BLACKSWAN_MAX_STRICT_SIZE", "6")
        monkeypatch.setenv("BLACKSWAN_LOG_LEVEL", "INFO")
        config = ConfigManager(str(tmp_path / "absent.yaml")).load_config()
        assert config.models.max_strict_size == 6
        assert config.logging.level == "INFO"

    def test_dotenv_file_is_read(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("BLACKSWAN_MAX_ACTIONS", raising=False)
        (tmp_path / ".env").write_text("BLACKSWAN_MAX_ACTIONS=3\n")
        config = ConfigManager(str(tmp_path / "absent.yaml")).load_config()
        assert config.decision.max_actions == 3

    def test_non_integer_override(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("BLACKSWAN_MAX_EVENTS", "many")
        with pytest.raises(ConfigError):
            ConfigManager(str(tmp_path / "absent.yaml")).load_config()

    def test_malformed_yaml(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = tmp_path / "config.yaml"
        path.write_text("models: [unclosed\n")
        with pytest.raises(ConfigError):
            ConfigManager(str(path)).load_config()

    def test_unknown_key(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = tmp_path / "config.yaml"
        path.write_text("models:\n  max_size: 3\n")
        with pytest.raises(ConfigError):
            ConfigManager(str(path)).load_config()

    def test_cap_above_hard_limit(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = tmp_path / "config.yaml"
        path.write_text("models:\n  max_arbitrary_size: 9\n")
        with pytest.raises(ConfigError):
            ConfigManager(str(path)).load_config()

    def test_reload(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = tmp_path / "config.yaml"
        path.write_text("decision:\n  max_outcomes: 1\n")
        manager = ConfigManager(str(path))
        assert manager.get_config().decision.max_outcomes == 1
        path.write_text("decision:\n  max_outcomes: 3\n")
        assert manager.get_config().decision.max_outcomes == 1
        assert manager.reload_config().decision.max_outcomes == 3


class TestValidation:
    """Test cases for cap validation helpers."""

    def test_defaults_are_valid(self):
        validate_config(AppConfig())

    def test_unknown_log_level(self):
        with pytest.raises(ConfigError):
            validate_config(AppConfig(logging=LoggingConfig(level="LOUD")))

    def test_with_caps(self):
        config = with_caps(AppConfig(), max_arbitrary_size=2, max_actions=3)
        assert config.models.max_arbitrary_size == 2
        assert config.decision.max_actions == 3
        with pytest.raises(ConfigError):
            with_caps(AppConfig(), max_widgets=1)

    def test_cap_for_mode(self):
        caps = ModelCapsConfig()
        assert caps.cap_for(strict=True) == 5
        assert caps.cap_for(strict=False) == 4


if __name__ == "__main__":
    pytest.main([__file__])
