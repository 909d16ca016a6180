"""
Command registry for the Scoring Games Calculator.
Maps command words to handlers and runs single command lines.
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from commands.context import CommandContext
from commands.game_commands import (
    birthday_command,
    canon_command,
    cmp_command,
    guaranteed_command,
    invertible_command,
    let_command,
    show_command,
    stops_command,
)
from commands.session_commands import load_command, quit_command, save_command
from core.exceptions import InvalidArgumentError, ScoringGameError
from rulesets import list_available_rulesets
from utils.logger import logger


Handler = Callable[[str, CommandContext], str]

_COMMAND_LINE = re.compile(r"^\s*([A-Za-z]+)\s*(.*?)\s*$", re.DOTALL)


@dataclass(frozen=True)
class Command:
    name: str
    handler: Handler
    usage: str
    description: str
    quits: bool = False


class CommandResult(BaseModel):
    """Outcome of one command line."""

    output: str = ""
    ok: bool = True
    should_quit: bool = False


class CommandRegistry:
    """Central registry for calculator commands."""

    def __init__(self):
        """Initialize the command registry."""
        self._commands: Dict[str, Command] = {}

    def register_default_commands(self):
        """Register the default command set."""
        self.register_command(Command("let", let_command, "let NAME = EXPR", "bind NAME to the value of EXPR"))
        self.register_command(Command("show", show_command, "show EXPR", "print the value of EXPR"))
        self.register_command(Command("canon", canon_command, "canon EXPR", "print the canonical form"))
        self.register_command(Command("cmp", cmp_command, "cmp EXPR, EXPR", "compare: >=, <=, == or ||"))
        self.register_command(Command("stops", stops_command, "stops EXPR", "print Ls, Rs and the pass-allowed stops"))
        self.register_command(Command("guaranteed", guaranteed_command, "guaranteed EXPR", "check membership in the guaranteed universe"))
        self.register_command(Command("invertible", invertible_command, "invertible EXPR", "check whether the conjugate is an inverse"))
        self.register_command(Command("birthday", birthday_command, "birthday EXPR", "print the depth of the game tree"))
        self.register_command(Command("save", save_command, "save PATH", "write all bindings to PATH"))
        self.register_command(Command("load", load_command, "load PATH", "read bindings from PATH"))
        self.register_command(Command("help", self._help_command, "help", "list the commands and rulesets"))
        self.register_command(Command("quit", quit_command, "quit", "leave the calculator", quits=True))

    def register_command(self, command: Command):
        """
        Register a new command in the registry.

        Args:
            command: The command; its name is the first word of a command line
        """
        self._commands[command.name] = command

    def get_command(self, name: str) -> Optional[Command]:
        """
        Get a specific command by name.

        Args:
            name: Name of the command to retrieve

        Returns:
            The requested command or None if not found
        """
        return self._commands.get(name)

    def get_command_names(self) -> List[str]:
        return list(self._commands.keys())

    def list_commands(self) -> str:
        """
        Get a formatted string listing all commands.

        Returns:
            Formatted string with usage and description per command
        """
        if not self._commands:
            return "No commands registered."
        width = max(len(command.usage) for command in self._commands.values())
        lines = ["Commands:"]
        for command in self._commands.values():
            lines.append(f"  {command.usage.ljust(width)}  {command.description}")
        return "\n".join(lines)

    def _help_command(self, argument: str, context: CommandContext) -> str:
        return f"{self.list_commands()}\n\n{list_available_rulesets()}"


# Global command registry instance
_command_registry = CommandRegistry()
_command_registry.register_default_commands()


def get_command_names() -> List[str]:
    """Get names of all registered commands."""
    return _command_registry.get_command_names()


def list_available_commands() -> str:
    """Get a formatted list of available commands."""
    return _command_registry.list_commands()


def execute_command(line: str, context: CommandContext) -> CommandResult:
    """
    Execute one command line, letting errors propagate.

    Args:
        line: e.g. ``cmp <E1|2>, <-1|2>``
        context: Session bindings and output settings

    Returns:
        The command's output
    """
    match = _COMMAND_LINE.match(line)
    if not match:
        raise InvalidArgumentError(f"not a command: '{line.strip()}'")
    word, argument = match.groups()
    if word == "exit":
        word = "quit"
    command = _command_registry.get_command(word)
    if not command:
        raise InvalidArgumentError(f"unknown command '{word}'", detail="type 'help' for the command list")
    output = command.handler(argument, context)
    return CommandResult(output=output, should_quit=command.quits)


def run_command(line: str, context: CommandContext) -> CommandResult:
    """Execute one command line, reporting errors as an ``error: ...`` result."""
    try:
        return execute_command(line, context)
    except ScoringGameError as e:
        message = e.message
    except OSError as e:
        message = f"{e.strerror or e}: {e.filename}" if e.filename else str(e)
    except RecursionError:
        message = "game too deep for the configured recursion limit"
    logger.debug("command failed: {}", line)
    return CommandResult(output=f"error: {message}", ok=False)
