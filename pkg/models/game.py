"""
Game value model for the Scoring Games Calculator.
Defines sides (atom or option set) and interned game values.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from core.exceptions import InvalidArgumentError


@dataclass(frozen=True, slots=True)
class Side:
    """One side of a game: either an atom ∅^s or a nonempty set of options.

    Options are deduplicated and kept in canonical order, so two structurally
    equal sides compare equal field by field.
    """

    atom: Optional[Fraction] = None
    options: Tuple["GameValue", ...] = ()

    @classmethod
    def of_atom(cls, score) -> "Side":
        return cls(atom=Fraction(score))

    @classmethod
    def of_options(cls, options: Iterable["GameValue"]) -> "Side":
        unique = {option.id: option for option in options}
        if not unique:
            raise InvalidArgumentError("an empty option set must be written as an atom")
        return cls(options=tuple(sorted(unique.values(), key=lambda g: g.sort_key)))

    @property
    def is_atom(self) -> bool:
        return self.atom is not None

    @property
    def sort_key(self) -> tuple:
        if self.is_atom:
            return (0, self.atom)
        return (1, tuple(option.sort_key for option in self.options))

    def to_literal(self) -> str:
        if self.is_atom:
            return f"E{self.atom}"
        return ", ".join(option.to_literal() for option in self.options)


class GameValue:
    """Immutable game tree node. Instances are created by the interner only.

    Equality is identity: two values are structurally equal exactly when
    they are the same object, which is also when their ids match.
    """

    __slots__ = (
        "id",
        "left",
        "right",
        "birthday",
        "min_atom",
        "max_atom",
        "guaranteed",
        "sort_key",
        "_literal",
    )

    def __init__(
        self,
        id: int,
        left: Side,
        right: Side,
        birthday: int,
        min_atom: Fraction,
        max_atom: Fraction,
        guaranteed: bool,
    ):
        self.id = id
        self.left = left
        self.right = right
        self.birthday = birthday
        self.min_atom = min_atom
        self.max_atom = max_atom
        self.guaranteed = guaranteed
        self.sort_key = (left.sort_key, right.sort_key)
        self._literal = None

    def __hash__(self) -> int:
        return self.id

    @property
    def left_options(self) -> Tuple["GameValue", ...]:
        return self.left.options

    @property
    def right_options(self) -> Tuple["GameValue", ...]:
        return self.right.options

    @property
    def is_number(self) -> bool:
        return self.left.is_atom and self.right.is_atom and self.left.atom == self.right.atom

    def to_literal(self) -> str:
        """Render in the ASCII literal grammar, e.g. ``<E1 | 4, <E3|3>>``."""
        if self._literal is None:
            if self.is_number:
                self._literal = str(self.left.atom)
            else:
                wide = len(self.left.options) > 1 or len(self.right.options) > 1
                separator = " | " if wide else "|"
                self._literal = f"<{self.left.to_literal()}{separator}{self.right.to_literal()}>"
        return self._literal

    def __repr__(self) -> str:
        return f"GameValue({self.to_literal()})"

    def __str__(self) -> str:
        return self.to_literal()
