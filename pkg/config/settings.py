"""
Configuration management for the Scoring Games Calculator.
Handles environment variables, engine limits and calculator preferences.
"""

from typing import Any, Dict, Literal

from pydantic import BaseModel, Field, ValidationError

from config.constants import (
    SGC_OUTPUT_FORMAT,
    SGC_UNICODE_ATOMS,
    SGC_PROMPT,
    SGC_ORACLE_MAX_CANDIDATES,
    SGC_ORACLE_MAX_OPTIONS,
    SGC_RECURSION_LIMIT,
    SGC_DEBUG,
)
from core.exceptions import ConfigurationError


# Configuration dictionary to hold all settings
CONFIG = {}

_TRUE_VALUES = {"1", "true", "yes", "on"}


class EngineSettings(BaseModel):
    """Limits applied by the game engine."""

    oracle_max_candidates: int = Field(gt=0)
    oracle_max_options: int = Field(ge=1)
    recursion_limit: int = Field(ge=1000)


class CalculatorSettings(BaseModel):
    """Presentation settings for the calculator front end."""

    format: Literal["literal", "pretty"]
    unicode_atoms: bool
    prompt: str


def _flag(value: str) -> bool:
    return str(value).strip().lower() in _TRUE_VALUES


def setup_engine_config():
    """Configure engine limits."""
    CONFIG['engine'] = {
        'oracle_max_candidates': SGC_ORACLE_MAX_CANDIDATES,  # enumeration cap for oracle_ge
        'oracle_max_options': SGC_ORACLE_MAX_OPTIONS,  # option-set width of enumerated X
        'recursion_limit': SGC_RECURSION_LIMIT,
    }


def setup_calculator_config():
    """Configure calculator output."""
    CONFIG['calculator'] = {
        'format': SGC_OUTPUT_FORMAT,
        'unicode_atoms': _flag(SGC_UNICODE_ATOMS),
        'prompt': SGC_PROMPT,
    }


def setup_logging_config():
    """Configure logging behavior."""
    CONFIG['logging'] = {
        'debug': _flag(SGC_DEBUG),
    }


def validate_config():
    """Validate that all required configuration is present and well formed."""
    required_keys = ['engine', 'calculator', 'logging']

    missing_keys = [key for key in required_keys if key not in CONFIG]
    if missing_keys:
        raise ConfigurationError(f"Missing required configuration keys: {missing_keys}")

    try:
        EngineSettings(**CONFIG['engine'])
        CalculatorSettings(**CONFIG['calculator'])
    except ValidationError as e:
        raise ConfigurationError("Invalid configuration", detail=str(e)) from e


def get_config(key: str = None) -> Any:
    """
    Get configuration value(s).

    Args:
        key: Specific config key to retrieve. If None, returns entire config.

    Returns:
        Configuration value or entire config dict.
    """
    if key:
        return CONFIG.get(key)
    return CONFIG


def update_config(key: str, value: Any):
    """Update a configuration value."""
    CONFIG[key] = value


def load_config():
    """Load all configuration settings."""
    setup_engine_config()
    setup_calculator_config()
    setup_logging_config()

    validate_config()


def _section(name: str) -> Dict[str, Any]:
    # Library callers may never call load_config.
    if name not in CONFIG:
        load_config()
    return CONFIG[name]


def get_engine_config() -> Dict[str, Any]:
    """Get engine configuration."""
    return _section('engine')


def get_calculator_config() -> Dict[str, Any]:
    """Get calculator configuration."""
    return _section('calculator')


def is_debug_enabled() -> bool:
    """Check if debug logging is enabled."""
    return _section('logging').get('debug', False)
