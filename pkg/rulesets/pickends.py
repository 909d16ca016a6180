"""
PickEnds: players alternately take a piece from either end of a row.

Left adds the piece's value to the running score, Right subtracts it. When
the row is empty the game ends with the accumulated score. Every non-terminal
position offers moves to both players, so all values are guaranteed.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from engine.game import Score, to_score
from models.game import GameValue
from models.results import Player
from rulesets.position import Position, to_game as position_to_game


@dataclass(frozen=True)
class PickEndsPosition(Position):
    pieces: Tuple[Score, ...] = ()
    accumulated: Score = Score(0)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(to_score(v) for v in self.pieces))
        object.__setattr__(self, "accumulated", to_score(self.accumulated))

    @classmethod
    def of(cls, pieces: Iterable, accumulated=0) -> "PickEndsPosition":
        return cls(tuple(pieces), accumulated)

    def moves(self, player: Player) -> List["PickEndsPosition"]:
        if not self.pieces:
            return []
        sign = 1 if player is Player.LEFT else -1
        first = PickEndsPosition(self.pieces[1:], self.accumulated + sign * self.pieces[0])
        if len(self.pieces) == 1:
            return [first]
        last = PickEndsPosition(self.pieces[:-1], self.accumulated + sign * self.pieces[-1])
        return [first, last]

    def score(self) -> Score:
        return self.accumulated

    def mirrored(self) -> "PickEndsPosition":
        """The same row reversed with the accumulated score negated; its value is the conjugate."""
        return PickEndsPosition(tuple(reversed(self.pieces)), -self.accumulated)


def moves(position: PickEndsPosition, player: Player) -> List[PickEndsPosition]:
    return position.moves(player)


def to_game(position: PickEndsPosition) -> GameValue:
    return position_to_game(position)


def from_pieces(pieces: Iterable) -> PickEndsPosition:
    """Start position for a row of pieces."""
    return PickEndsPosition.of(pieces)
