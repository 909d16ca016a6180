"""
Normal-play game trees, the input of the scoring-play embedding.
"""

from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class NormalPlayTree:
    """A Normal-play game { left | right } with possibly empty option lists."""

    left: Tuple["NormalPlayTree", ...] = field(default_factory=tuple)
    right: Tuple["NormalPlayTree", ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, left=(), right=()) -> "NormalPlayTree":
        return cls(tuple(left), tuple(right))

    @property
    def birthday(self) -> int:
        followers = self.left + self.right
        if not followers:
            return 0
        return 1 + max(follower.birthday for follower in followers)
