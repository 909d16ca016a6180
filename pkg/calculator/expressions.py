"""
Expression syntax tree for the calculator.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from engine.game import Score
from models.game import GameValue


@dataclass(frozen=True)
class Literal:
    """A game written out in the literal grammar (bare scores included)."""

    value: GameValue


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conjugate:
    operand: "Expr"


@dataclass(frozen=True)
class Hat:
    n: int


@dataclass(frozen=True)
class Canon:
    operand: "Expr"


@dataclass(frozen=True)
class RulesetCall:
    """``pickends [1, 2]`` and any other registered ruleset."""

    ruleset: str
    scores: Tuple[Score, ...]


@dataclass(frozen=True)
class Comparison:
    left: "Expr"
    right: "Expr"


Expr = Union[Literal, Name, Sum, Conjugate, Hat, Canon, RulesetCall, Comparison]
