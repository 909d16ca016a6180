"""
Custom logger implementation for the calculator.
Provides debug, info, warning and error logging on stderr with configurable debug mode.
"""

from rich.console import Console


class Logger:
    """Custom logger class writing to stderr through a rich console."""

    def __init__(self, debug_mode: bool = False, console: Console = None):
        """Initialize logger with optional debug mode."""
        self._debug_mode = debug_mode
        self._console = console or Console(stderr=True, highlight=False)

    def _emit(self, message: str, args, kwargs, style: str = None, end: str = '\n') -> None:
        if args or kwargs:
            message = message.format(*args, **kwargs)
        self._console.print(message, style=style, end=end, markup=False)

    def info(self, message: str, *args, end: str = '\n', **kwargs) -> None:
        """
        Log info message - always displayed.

        Args:
            message: The message to log
            *args: Format string arguments
            end: String appended after the message (default: '\n')
            **kwargs: Format string keyword arguments
        """
        self._emit(message, args, kwargs, end=end)

    def debug(self, message: str, *args, end: str = '\n', **kwargs) -> None:
        """
        Log debug message - only displayed if debug mode is enabled.

        Arguments are formatted only when the message is shown.
        """
        if not self._debug_mode:
            return
        self._emit(message, args, kwargs, style="dim", end=end)

    def warning(self, message: str, *args, **kwargs) -> None:
        """Log warning message."""
        self._emit("warning: " + message, args, kwargs, style="yellow")

    def error(self, message: str, *args, **kwargs) -> None:
        """Log error message."""
        self._emit("error: " + message, args, kwargs, style="bold red")

    @property
    def debug_mode(self) -> bool:
        """Get current debug mode state."""
        return self._debug_mode

    @debug_mode.setter
    def debug_mode(self, value: bool) -> None:
        """Set debug mode state."""
        self._debug_mode = value


# Create default logger instance
logger = Logger(debug_mode=False)
