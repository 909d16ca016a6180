"""
Interactive and batch front ends of the Scoring Games Calculator.
"""

import sys
from pathlib import Path
from typing import Optional

from prompt_toolkit import PromptSession
from prompt_toolkit.history import InMemoryHistory
from rich.console import Console

from commands import CommandContext, list_available_commands, run_command
from config.settings import get_calculator_config, get_engine_config, is_debug_enabled, load_config
from utils.logger import logger


class ScoringGamesCalculator:
    """Runs command lines against one session, interactively or from a file."""

    def __init__(self, style: Optional[str] = None, debug: bool = False, console: Console = None):
        """Load configuration and set up the session."""
        load_config()
        logger.debug_mode = debug or is_debug_enabled()
        sys.setrecursionlimit(max(sys.getrecursionlimit(), get_engine_config()['recursion_limit']))

        self.context = CommandContext(style=style)
        self.console = console or Console(highlight=False, soft_wrap=True)
        logger.debug("calculator ready, output style {}", self.context.style)

    def emit(self, text: str) -> None:
        self.console.print(text, markup=False)

    def display_welcome_message(self):
        """Display welcome message and the command list."""
        logger.info("=" * 60)
        logger.info("Scoring Games Calculator")
        logger.info("=" * 60)
        logger.info(list_available_commands())
        logger.info("-" * 60)

    def handle_line(self, line: str) -> bool:
        """
        Run one line and print its output.

        Returns:
            False when the session should end
        """
        result = run_command(line, self.context)
        if result.output:
            self.emit(result.output)
        return not result.should_quit

    def conversation_loop(self):
        """Main read-eval-print loop."""
        prompt = PromptSession(history=InMemoryHistory())
        message = get_calculator_config()['prompt']
        while True:
            try:
                line = prompt.prompt(message).strip()
                if not line or line.startswith("#"):
                    continue
                if not self.handle_line(line):
                    break
            except KeyboardInterrupt:
                continue
            except EOFError:
                break

    def run_batch(self, path: Path) -> int:
        """
        Execute every command in a file, echoing each one before its output.

        Blank lines and lines starting with '#' are skipped. Execution continues
        after a failed command.

        Returns:
            Exit code: 1 if any command failed, else 0
        """
        failed = False
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            self.emit(f"> {line}")
            result = run_command(line, self.context)
            if result.output:
                self.emit(result.output)
            failed = failed or not result.ok
            if result.should_quit:
                break
        return 1 if failed else 0

    def run(self):
        """Interactive session."""
        self.display_welcome_message()
        self.conversation_loop()
