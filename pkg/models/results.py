"""
Result and descriptor types returned by the engine.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from models.game import GameValue


class Player(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Passer(str, Enum):
    NONE = "none"
    LEFT_PASSES = "left-passes"
    RIGHT_PASSES = "right-passes"


@dataclass(frozen=True)
class StopKind:
    """Which stop to compute: who starts, and who may pass."""

    side: Player
    passer: Passer = Passer.NONE

    @property
    def label(self) -> str:
        base = "Ls" if self.side is Player.LEFT else "Rs"
        if self.passer is Passer.RIGHT_PASSES:
            return f"underline-{base}"
        if self.passer is Passer.LEFT_PASSES:
            return f"overline-{base}"
        return base


LEFT_STOP = StopKind(Player.LEFT)
RIGHT_STOP = StopKind(Player.RIGHT)
# underline: Right may pass; overline: Left may pass
LEFT_STOP_UNDER = StopKind(Player.LEFT, Passer.RIGHT_PASSES)
RIGHT_STOP_OVER = StopKind(Player.RIGHT, Passer.LEFT_PASSES)
LEFT_STOP_OVER = StopKind(Player.LEFT, Passer.LEFT_PASSES)
RIGHT_STOP_UNDER = StopKind(Player.RIGHT, Passer.RIGHT_PASSES)

ALL_STOP_KINDS = (
    LEFT_STOP,
    RIGHT_STOP,
    LEFT_STOP_UNDER,
    RIGHT_STOP_OVER,
    LEFT_STOP_OVER,
    RIGHT_STOP_UNDER,
)


class Relation(str, Enum):
    GREATER_EQ = ">="
    LESS_EQ = "<="
    EQUIVALENT = "=="
    INCOMPARABLE = "||"


@dataclass(frozen=True)
class OrderResult:
    """Outcome of comparing G with H in both directions."""

    ge: bool
    le: bool

    @property
    def relation(self) -> Relation:
        if self.ge and self.le:
            return Relation.EQUIVALENT
        if self.ge:
            return Relation.GREATER_EQ
        if self.le:
            return Relation.LESS_EQ
        return Relation.INCOMPARABLE

    @property
    def symbol(self) -> str:
        return self.relation.value


class Projections(NamedTuple):
    min_score: Fraction
    max_score: Fraction
    m_abs: Fraction
    g_min: GameValue
    g_max: GameValue


class OracleResult(NamedTuple):
    """Outcome of the brute-force comparison; witness is None when nothing refutes G >= H."""

    witness: Optional[GameValue]
    examined: int

    @property
    def no_witness(self) -> bool:
        return self.witness is None


class ReductionKind(str, Enum):
    REMOVE_DOMINATED = "RemoveDominated"
    BYPASS_NON_ATOMIC_REVERSIBLE = "BypassNonAtomicReversible"
    DROP_ATOMIC_REVERSIBLE = "DropAtomicReversible"
    REPLACE_ATOMIC_REVERSIBLE = "ReplaceAtomicReversible"
    SUBSTITUTE_LONE_ATOMIC = "SubstituteLoneAtomic"


@dataclass(frozen=True)
class ReductionStep:
    """One simplification of a game's option set.

    ``replacement`` holds the options that take the target's place (empty for
    removals); ``score`` is the atom of a left- or right-atomic reversing
    option and ``waiting_index`` the n of the ``score - ^(n+1)`` replacement.
    """

    kind: ReductionKind
    side: Player
    target: GameValue
    reversing: Optional[GameValue] = None
    replacement: Tuple[GameValue, ...] = ()
    score: Optional[Fraction] = None
    waiting_index: Optional[int] = None

    def describe(self) -> str:
        text = f"{self.kind.value} {self.side.value} {self.target.to_literal()}"
        if self.replacement:
            text += " -> " + ", ".join(g.to_literal() for g in self.replacement)
        elif self.kind is ReductionKind.SUBSTITUTE_LONE_ATOMIC:
            text += f" -> E{self.score}"
        return text
