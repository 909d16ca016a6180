"""
Interning table for game values.
Structurally equal games share one GameValue, so identity is structural equality.
"""

import itertools
import threading
from fractions import Fraction
from typing import Dict, Tuple

from models.game import GameValue, Side


class GameInterner:
    """Hash-consing table mapping side signatures to GameValues.

    Thread-safe; ids are handed out in creation order.
    """

    def __init__(self):
        """Initialize an empty table."""
        self._table: Dict[Tuple, GameValue] = {}
        self._ids = itertools.count()
        self.lock = threading.RLock()

    @staticmethod
    def _signature(side: Side) -> Tuple:
        if side.is_atom:
            return ('a', side.atom)
        return ('o', tuple(option.id for option in side.options))

    def intern(self, left: Side, right: Side) -> GameValue:
        """
        Return the unique GameValue with the given sides.

        Args:
            left: Left side, options already deduplicated and ordered
            right: Right side

        Returns:
            The shared instance for this structure
        """
        key = (self._signature(left), self._signature(right))
        with self.lock:
            value = self._table.get(key)
            if value is None:
                value = self._build(next(self._ids), left, right)
                self._table[key] = value
            return value

    @staticmethod
    def _build(value_id: int, left: Side, right: Side) -> GameValue:
        options = left.options + right.options
        birthday = 1 + max(g.birthday for g in options) if options else 0

        atoms = [side.atom for side in (left, right) if side.is_atom]
        min_atom = min(atoms + [g.min_atom for g in options])
        max_atom = max(atoms + [g.max_atom for g in options])

        guaranteed = all(g.guaranteed for g in options) and node_is_guaranteed(left, right)
        return GameValue(value_id, left, right, birthday, min_atom, max_atom, guaranteed)


def _side_min(side: Side) -> Fraction:
    if side.is_atom:
        return side.atom
    return min(g.min_atom for g in side.options)


def _side_max(side: Side) -> Fraction:
    if side.is_atom:
        return side.atom
    return max(g.max_atom for g in side.options)


def node_is_guaranteed(left: Side, right: Side) -> bool:
    """Check the atomic condition at one node: a Left atom is at most every
    atom under the Right side, and a Right atom at least every atom under the Left side."""
    if left.is_atom and left.atom > _side_min(right):
        return False
    if right.is_atom and right.atom < _side_max(left):
        return False
    return True


# Global interner instance
_interner = GameInterner()


def intern(left: Side, right: Side) -> GameValue:
    """Intern a game in the engine-wide table."""
    return _interner.intern(left, right)
