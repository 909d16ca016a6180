"""
Shared state handed to every command handler.
"""

from dataclasses import dataclass, field

from calculator.formatter import format_game
from calculator.session import Session
from config.settings import get_calculator_config
from models.game import GameValue


@dataclass
class CommandContext:
    session: Session = field(default_factory=Session)
    style: str = None
    unicode_atoms: bool = None

    def __post_init__(self):
        settings = get_calculator_config()
        if self.style is None:
            self.style = settings['format']
        if self.unicode_atoms is None:
            self.unicode_atoms = settings['unicode_atoms']

    def render(self, g: GameValue) -> str:
        return format_game(g, self.style, self.unicode_atoms)
