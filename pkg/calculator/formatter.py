"""
Text rendering of game values.

Literal style is exactly the input grammar, so it always parses back to the
same value. Pretty style additionally prints waiting moves as ``^n``,
``s+^n`` and ``s-^n``.
"""

from typing import Optional, Tuple

from core.exceptions import InvalidArgumentError
from engine.game import Score
from models.game import GameValue, Side


STYLES = ("literal", "pretty")


def _waiting_form(g: GameValue) -> Optional[Tuple[Score, int, int]]:
    """Recognize s + ^n (direction 1) and s - ^n (direction -1); numbers give n = 0."""
    if g.is_number:
        return g.left.atom, 0, 0
    if len(g.left_options) == 1 and g.right.is_atom:
        inner = _waiting_form(g.left_options[0])
        if inner and inner[0] == g.right.atom and inner[2] >= 0:
            return inner[0], inner[1] + 1, 1
    if g.left.is_atom and len(g.right_options) == 1:
        inner = _waiting_form(g.right_options[0])
        if inner and inner[0] == g.left.atom and inner[2] <= 0:
            return inner[0], inner[1] + 1, -1
    return None


def _pretty(g: GameValue, atom_prefix: str) -> str:
    form = _waiting_form(g)
    if form is not None:
        score, n, direction = form
        if n == 0:
            return str(score)
        mark = "+" if direction > 0 else "-"
        if score == 0:
            return f"^{n}" if direction > 0 else f"-^{n}"
        return f"{score}{mark}^{n}"

    def side(s: Side) -> str:
        if s.is_atom:
            return f"{atom_prefix}{s.atom}"
        return ", ".join(_pretty(option, atom_prefix) for option in s.options)

    wide = len(g.left_options) > 1 or len(g.right_options) > 1
    separator = " | " if wide else "|"
    return f"<{side(g.left)}{separator}{side(g.right)}>"


def format_game(g: GameValue, style: str = "literal", unicode_atoms: bool = False) -> str:
    """
    Render a game.

    Args:
        g: The game
        style: "literal" or "pretty"
        unicode_atoms: In pretty style, write atoms as ∅^s instead of Es

    Returns:
        The text form
    """
    if style == "literal":
        return g.to_literal()
    if style == "pretty":
        return _pretty(g, "∅^" if unicode_atoms else "E")
    raise InvalidArgumentError(f"unknown output style '{style}'", detail=f"expected one of {STYLES}")
