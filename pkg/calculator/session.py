"""
Named bindings of the calculator and their session files.

A session file holds one ``name = literal`` line per binding, UTF-8 with LF
line endings.
"""

import re
from pathlib import Path
from typing import Dict, Iterator, Tuple

from calculator.parser import parse_game
from core.exceptions import ParseError, SessionFileError
from models.game import GameValue
from utils.logger import logger


_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+?)\s*$")


class Session:
    """Ordered map from names to game values."""

    def __init__(self):
        self._bindings: Dict[str, GameValue] = {}

    def bind(self, name: str, value: GameValue) -> None:
        self._bindings[name] = value

    def get(self, name: str) -> GameValue:
        return self._bindings.get(name)

    @property
    def bindings(self) -> Dict[str, GameValue]:
        return self._bindings

    def __contains__(self, name: str) -> bool:
        return name in self._bindings

    def __len__(self) -> int:
        return len(self._bindings)

    def __iter__(self) -> Iterator[Tuple[str, GameValue]]:
        return iter(self._bindings.items())

    def dumps(self) -> str:
        return "".join(f"{name} = {value.to_literal()}\n" for name, value in self._bindings.items())

    def loads(self, text: str) -> int:
        """
        Read bindings from session text, replacing same-named ones.

        Args:
            text: Session file contents

        Returns:
            Number of bindings read
        """
        parsed = []
        for number, line in enumerate(text.split("\n"), start=1):
            if not line.strip():
                continue
            match = _LINE.match(line)
            if not match:
                raise SessionFileError(f"malformed session line {number}", detail=line)
            try:
                parsed.append((match.group(1), parse_game(match.group(2))))
            except ParseError as e:
                raise SessionFileError(f"session line {number}: {e.message}", detail=line) from e
        for name, value in parsed:
            self.bind(name, value)
        return len(parsed)

    def save(self, path) -> int:
        """Write all bindings to path; returns how many were written."""
        Path(path).write_text(self.dumps(), encoding="utf-8", newline="\n")
        logger.debug("session: saved {} bindings to {}", len(self), path)
        return len(self)

    def load(self, path) -> int:
        """Read bindings from path; returns how many were read."""
        text = Path(path).read_text(encoding="utf-8")
        count = self.loads(text)
        logger.debug("session: loaded {} bindings from {}", count, path)
        return count
