"""
Configuration management for the Black Swan logic toolkit.
Handles loading, validation, and access to size caps, search bounds and logging settings.
"""

import os
import logging
import yaml
from typing import Dict, Any, Optional
from dataclasses import dataclass, field, replace
from pathlib import Path

from dotenv import find_dotenv, load_dotenv

from ..errors import ConfigError


logger = logging.getLogger(__name__)

# Hard limits; a configured cap above these is rejected.
HARD_LIMITS = {
    'max_arbitrary_size': 5,
    'max_strict_size': 6,
    'max_actions': 4,
    'max_outcomes': 4,
    'max_events': 5,
}

ENV_OVERRIDES = {
    'BLACKSWAN_MAX_ARBITRARY_SIZE': ('models', 'max_arbitrary_size'),
    'BLACKSWAN_MAX_STRICT_SIZE': ('models', 'max_strict_size'),
    'BLACKSWAN_MAX_COUNTEREXAMPLES': ('models', 'max_counterexamples'),
    'BLACKSWAN_MAX_ACTIONS': ('decision', 'max_actions'),
    'BLACKSWAN_MAX_OUTCOMES': ('decision', 'max_outcomes'),
    'BLACKSWAN_MAX_EVENTS': ('decision', 'max_events'),
    'BLACKSWAN_MAX_TABLES': ('decision', 'max_tables'),
}


@dataclass(frozen=True)
class LoggingConfig:
    """Logging configuration settings."""
    level: str = "WARNING"
    file: Optional[str] = None
    max_size_mb: int = 10
    backup_count: int = 5


@dataclass(frozen=True)
class ModelCapsConfig:
    """Size caps for finite-model enumeration."""
    max_arbitrary_size: int = 4
    max_strict_size: int = 5
    max_counterexamples: int = 20

    def cap_for(self, strict: bool) -> int:
        """Cap for the given enumeration mode."""
        return self.max_strict_size if strict else self.max_arbitrary_size


@dataclass(frozen=True)
class DecisionBoundsConfig:
    """Bounds for the decision-model completeness searches."""
    max_actions: int = 2
    max_outcomes: int = 2
    max_events: int = 3
    max_tables: int = 65536


@dataclass(frozen=True)
class KernelConfig:
    """Proof kernel settings."""
    verify_corpus_on_startup: bool = True
    mutation_seed: int = 20240229
    mutation_count: int = 120


@dataclass(frozen=True)
class AppConfig:
    """Main toolkit configuration."""
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    models: ModelCapsConfig = field(default_factory=ModelCapsConfig)
    decision: DecisionBoundsConfig = field(default_factory=DecisionBoundsConfig)
    kernel: KernelConfig = field(default_factory=KernelConfig)


class ConfigManager:
    """Manages application configuration loading and validation."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = Path(config_path or os.environ.get('BLACKSWAN_CONFIG', 'config.yaml'))
        self._config: Optional[AppConfig] = None

    def load_config(self) -> AppConfig:
        """Load configuration from YAML file, then apply environment overrides."""
        load_dotenv(find_dotenv(usecwd=True))

        config_data: Dict[str, Any] = {}
        if self.config_path.exists():
            try:
                with open(self.config_path, 'r') as file:
                    config_data = yaml.safe_load(file) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Malformed configuration file {self.config_path}: {e}")
            if not isinstance(config_data, dict):
                raise ConfigError(f"Configuration file {self.config_path} must contain a mapping")
        else:
            logger.info(f"Configuration file not found: {self.config_path}, using defaults")

        sections = {
            'logging': dict(config_data.get('logging') or {}),
            'models': dict(config_data.get('models') or {}),
            'decision': dict(config_data.get('decision') or {}),
            'kernel': dict(config_data.get('kernel') or {}),
        }

        for env_name, (section, key) in ENV_OVERRIDES.items():
            value = os.environ.get(env_name)
            if value is not None:
                try:
                    sections[section][key] = int(value)
                except ValueError:
                    raise ConfigError(f"{env_name} must be an integer, got {value!r}")
        if os.environ.get('BLACKSWAN_LOG_LEVEL'):
            sections['logging']['level'] = os.environ['BLACKSWAN_LOG_LEVEL']

        try:
            config = AppConfig(
                logging=LoggingConfig(**sections['logging']),
                models=ModelCapsConfig(**sections['models']),
                decision=DecisionBoundsConfig(**sections['decision']),
                kernel=KernelConfig(**sections['kernel']),
            )
        except TypeError as e:
            raise ConfigError(f"Unknown configuration key: {e}")

        validate_config(config)
        self._config = config
        return self._config

    def get_config(self) -> AppConfig:
        """Get the current configuration, loading if necessary."""
        if self._config is None:
            self._config = self.load_config()
        return self._config

    def reload_config(self) -> AppConfig:
        """Reload configuration from file."""
        self._config = None
        return self.get_config()

    def use(self, config: AppConfig) -> None:
        """Install an already-built configuration (used by the CLI and tests)."""
        validate_config(config)
        self._config = config


def validate_config(config: AppConfig) -> None:
    """Check every cap against its hard limit."""
    values = {
        'max_arbitrary_size': config.models.max_arbitrary_size,
        'max_strict_size': config.models.max_strict_size,
        'max_actions': config.decision.max_actions,
        'max_outcomes': config.decision.max_outcomes,
        'max_events': config.decision.max_events,
    }
    for key, value in values.items():
        if not 1 <= value <= HARD_LIMITS[key]:
            raise ConfigError(f"{key}={value} outside 1..{HARD_LIMITS[key]}")
    if config.models.max_counterexamples < 1:
        raise ConfigError("max_counterexamples must be at least 1")
    if config.decision.max_tables < 1:
        raise ConfigError("max_tables must be at least 1")
    if getattr(logging, str(config.logging.level).upper(), None) is None:
        raise ConfigError(f"Unknown log level: {config.logging.level}")


def with_caps(config: AppConfig, **caps: int) -> AppConfig:
    """Return a copy of the configuration with model or decision caps replaced."""
    model_keys = {k: v for k, v in caps.items() if hasattr(config.models, k)}
    decision_keys = {k: v for k, v in caps.items() if hasattr(config.decision, k)}
    unknown = set(caps) - set(model_keys) - set(decision_keys)
    if unknown:
        raise ConfigError(f"Unknown cap(s): {', '.join(sorted(unknown))}")
    return replace(
        config,
        models=replace(config.models, **model_keys),
        decision=replace(config.decision, **decision_keys),
    )


# Global config instance
config_manager = ConfigManager()


def get_config() -> AppConfig:
    """Get the current application configuration."""
    return config_manager.get_config()
