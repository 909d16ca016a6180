"""
Exhaustive enumeration of small guaranteed games.
Used by the brute-force order oracle and by the test corpora.
"""

import itertools
import math
from typing import Iterable, List, Optional

from config.settings import get_engine_config
from core.exceptions import EnumerationLimitError, InvalidArgumentError
from engine.game import to_score
from engine.interner import intern
from models.game import GameValue, Side
from utils.logger import logger


def _side_count(pool_size: int, atom_count: int, max_options: int) -> int:
    return atom_count + sum(math.comb(pool_size, k) for k in range(1, max_options + 1))


def _sides(pool: List[GameValue], scores: List, max_options: int) -> Iterable[Side]:
    for score in scores:
        yield Side.of_atom(score)
    for k in range(1, max_options + 1):
        for combo in itertools.combinations(pool, k):
            yield Side.of_options(combo)


def enumerate_guaranteed(
    max_birthday: int,
    scores: Iterable,
    max_options: Optional[int] = None,
    max_candidates: Optional[int] = None,
) -> List[GameValue]:
    """
    List every guaranteed game up to a birthday over a finite score set.

    Args:
        max_birthday: Largest birthday to include
        scores: Atom scores allowed anywhere in the game
        max_options: Largest option-set size (None means unbounded)
        max_candidates: Cap on the number of (left, right) side pairs tried per day;
            defaults to the engine configuration

    Returns:
        Games ordered by birthday, then canonical value order
    """
    if max_birthday < 0:
        raise InvalidArgumentError("max_birthday must be nonnegative")
    score_list = sorted({to_score(s) for s in scores})
    if not score_list:
        raise InvalidArgumentError("the score set must not be empty")
    if max_candidates is None:
        max_candidates = get_engine_config()['oracle_max_candidates']

    pool: List[GameValue] = []
    for day in range(max_birthday + 1):
        width = len(pool) if max_options is None else min(max_options, len(pool))
        side_count = _side_count(len(pool), len(score_list), width)
        if side_count * side_count > max_candidates:
            raise EnumerationLimitError(
                f"enumerating birthday {day} needs {side_count * side_count} candidates",
                detail=f"cap is {max_candidates}",
            )
        sides = list(_sides(pool, score_list, width))
        found = {}
        for left in sides:
            for right in sides:
                game = intern(left, right)
                if game.guaranteed:
                    found[game.id] = game
        pool = sorted(found.values(), key=lambda g: g.sort_key)
        logger.debug("enumeration: {} guaranteed games born by day {}", len(pool), day)

    return sorted(pool, key=lambda g: (g.birthday, g.sort_key))
