"""
Abstract board positions and their conversion to game values.
"""

from abc import ABC, abstractmethod
from typing import Dict, List

from core.exceptions import RulesetError
from engine.game import Score, find_guarantee_violation, make
from models.game import GameValue
from models.results import Player


class Position(ABC):
    """A ruleset position. Subclasses must be immutable and hashable."""

    @abstractmethod
    def moves(self, player: Player) -> List["Position"]:
        """Return the positions reachable when ``player`` moves."""
        raise NotImplementedError

    @abstractmethod
    def score(self) -> Score:
        """Return the score if the player to move has no move here."""
        raise NotImplementedError


def to_game(position: Position) -> GameValue:
    """
    Translate a position into its game value.

    Args:
        position: Any ruleset position

    Returns:
        The guaranteed game value of the position
    """
    memo: Dict[Position, GameValue] = {}

    def convert(p: Position) -> GameValue:
        if p not in memo:
            memo[p] = make(side(p, Player.LEFT), side(p, Player.RIGHT))
        return memo[p]

    def side(p: Position, player: Player):
        successors = p.moves(player)
        if not successors:
            return p.score()
        return [convert(successor) for successor in successors]

    game = convert(position)
    violation = find_guarantee_violation(game)
    if violation is not None:
        raise RulesetError(
            f"{type(position).__name__} produced a game that is not guaranteed",
            detail=f"violating follower {violation.to_literal()}",
        )
    return game
