"""
Commands that manage the session: saving, loading and leaving.
"""

from commands.context import CommandContext
from core.exceptions import InvalidArgumentError


def _path(argument: str, usage: str) -> str:
    path = argument.strip()
    if not path:
        raise InvalidArgumentError(f"usage: {usage}")
    return path


def save_command(argument: str, context: CommandContext) -> str:
    count = context.session.save(_path(argument, "save PATH"))
    return f"saved {count} bindings"


def load_command(argument: str, context: CommandContext) -> str:
    count = context.session.load(_path(argument, "load PATH"))
    return f"loaded {count} bindings"


def quit_command(argument: str, context: CommandContext) -> str:
    return ""
