"""
Calculator commands.
"""

from .command_registry import (
    Command,
    CommandRegistry,
    CommandResult,
    execute_command,
    get_command_names,
    list_available_commands,
    run_command,
)
from .context import CommandContext

__all__ = [
    # Registry
    'Command',
    'CommandRegistry',
    'CommandResult',
    'CommandContext',
    'get_command_names',
    'list_available_commands',

    # Execution
    'execute_command',
    'run_command',
]
