"""
Configuration package for the Scoring Games Calculator.

This package handles all configuration management including:
- Environment variables
- Engine limits
- Calculator output preferences
"""

from .settings import (
    CalculatorSettings,
    EngineSettings,
    load_config,
    get_config,
    update_config,
    get_engine_config,
    get_calculator_config,
    is_debug_enabled,
)

__all__ = [
    # Settings functions
    'load_config',
    'get_config',
    'update_config',
    'get_engine_config',
    'get_calculator_config',
    'is_debug_enabled',

    # Models
    'EngineSettings',
    'CalculatorSettings',
]
