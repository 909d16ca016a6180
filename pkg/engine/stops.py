"""
Left and Right stops, with and without passing.
"""

import threading
from typing import Dict, List, Tuple

from cachetools import cached

from core.exceptions import InvalidArgumentError
from engine.game import Score, conjugate, hat, require_guaranteed, sum
from models.game import GameValue
from models.results import (
    ALL_STOP_KINDS,
    LEFT_STOP_OVER,
    LEFT_STOP_UNDER,
    RIGHT_STOP_OVER,
    RIGHT_STOP_UNDER,
    Passer,
    Player,
    StopKind,
)


_left_stop_cache: Dict[int, Score] = {}
_right_stop_cache: Dict[int, Score] = {}
_pass_stop_cache: Dict[tuple, Score] = {}


@cached(cache=_left_stop_cache, key=lambda g: g.id, lock=threading.RLock())
def ls(g: GameValue) -> Score:
    """Left-stop: the score reached with Left moving first and no passing."""
    if g.left.is_atom:
        return g.left.atom
    return max(rs(option) for option in g.left_options)


@cached(cache=_right_stop_cache, key=lambda g: g.id, lock=threading.RLock())
def rs(g: GameValue) -> Score:
    """Right-stop: the score reached with Right moving first and no passing."""
    if g.right.is_atom:
        return g.right.atom
    return min(ls(option) for option in g.right_options)


def pass_stop(g: GameValue, kind: StopKind) -> Score:
    """
    Compute a stop where one player may pass.

    The passing player gets b(G) waiting moves, or b(G) + 1 when it also
    moves first and may open with a pass; more never changes the value.

    Args:
        g: A guaranteed game
        kind: Which player starts and which player may pass

    Returns:
        The stop as an exact score
    """
    if not isinstance(kind, StopKind):
        raise InvalidArgumentError(f"not a stop kind: {kind!r}")
    require_guaranteed(g, operation=f"the {kind.label} stop")
    return _pass_stop(g, kind)


def waiting_moves_needed(g: GameValue, kind: StopKind) -> int:
    """Number of waiting moves after which the pass-allowed stop no longer changes."""
    passer_starts = (kind.passer is Passer.RIGHT_PASSES) == (kind.side is Player.RIGHT)
    return g.birthday + 1 if passer_starts else g.birthday


@cached(cache=_pass_stop_cache, key=lambda g, kind: (g.id, kind), lock=threading.RLock())
def _pass_stop(g: GameValue, kind: StopKind) -> Score:
    if kind.passer is Passer.NONE:
        return ls(g) if kind.side is Player.LEFT else rs(g)
    n = waiting_moves_needed(g, kind)
    if kind.passer is Passer.RIGHT_PASSES:
        position = sum(g, conjugate(hat(n)))
    else:
        position = sum(g, hat(n))
    return ls(position) if kind.side is Player.LEFT else rs(position)


def ls_under(g: GameValue) -> Score:
    """underline-Ls: Left starts, Right may pass."""
    return pass_stop(g, LEFT_STOP_UNDER)


def rs_over(g: GameValue) -> Score:
    """overline-Rs: Right starts, Left may pass."""
    return pass_stop(g, RIGHT_STOP_OVER)


def ls_over(g: GameValue) -> Score:
    return pass_stop(g, LEFT_STOP_OVER)


def rs_under(g: GameValue) -> Score:
    return pass_stop(g, RIGHT_STOP_UNDER)


def stop_table(g: GameValue) -> List[Tuple[str, Score]]:
    """All six stops as (label, value) pairs: Ls, Rs, then the four pass-allowed stops."""
    require_guaranteed(g, operation="stops")
    return [(kind.label, _pass_stop(g, kind)) for kind in ALL_STOP_KINDS]
