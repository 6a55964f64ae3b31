"""
Configuration management modules.
"""

from .settings import AppConfig, ConfigManager, get_config

__all__ = ['AppConfig', 'ConfigManager', 'get_config']
