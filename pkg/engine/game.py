"""
Game construction and the disjunctive sum.
Numbers, waiting moves, conjugates, the Normal-play embedding, projections and sums.
"""

import threading
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Union

from cachetools import cached

from core.exceptions import InvalidArgumentError, NotGuaranteedError
from engine.interner import intern, node_is_guaranteed
from models.game import GameValue, Side
from models.normal_play import NormalPlayTree
from models.results import Projections


Score = Fraction
SideLike = Union[Side, int, Fraction, str, Iterable[GameValue]]

# Memo tables live as long as the interner; entries never go stale.
_conjugate_cache: Dict[int, GameValue] = {}
_sum_cache: Dict[tuple, GameValue] = {}
_embed_cache: Dict[NormalPlayTree, GameValue] = {}


def to_score(value) -> Score:
    """
    Convert user input to an exact score.

    Args:
        value: int, Fraction, or a string such as "3", "-1/2" or "0.25"

    Returns:
        The score as a Fraction in lowest terms
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidArgumentError(f"scores must be exact rationals, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                numerator, denominator = text.split("/", 1)
                if int(denominator) == 0:
                    raise InvalidArgumentError(f"zero denominator in score '{text}'")
                return Fraction(int(numerator), int(denominator))
            return Fraction(Decimal(text))
        except (ValueError, InvalidOperation) as e:
            raise InvalidArgumentError(f"not a score: '{text}'") from e
    raise InvalidArgumentError(f"not a score: {value!r}")


def as_side(value: SideLike) -> Side:
    """Accept a Side, a score (atom) or an iterable of games (option set)."""
    if isinstance(value, Side):
        return value
    if isinstance(value, (int, Fraction, str)) and not isinstance(value, bool):
        return Side.of_atom(to_score(value))
    return Side.of_options(value)


def make(left: SideLike, right: SideLike) -> GameValue:
    """Build (or look up) the game ⟨left | right⟩."""
    return intern(as_side(left), as_side(right))


def number(s) -> GameValue:
    """The number s = ⟨∅^s | ∅^s⟩."""
    atom = Side.of_atom(to_score(s))
    return intern(atom, atom)


def hat(n: int) -> GameValue:
    """The waiting move n̂: hat(0) = 0 and hat(n) = ⟨hat(n-1) | ∅^0⟩."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidArgumentError(f"waiting-move index must be a nonnegative integer, got {n!r}")
    zero = Side.of_atom(0)
    game = intern(zero, zero)
    for _ in range(n):
        game = intern(Side(options=(game,)), zero)
    return game


def birthday(g: GameValue) -> int:
    return g.birthday


def is_guaranteed(g: GameValue) -> bool:
    return g.guaranteed


def is_left_atomic(g: GameValue) -> bool:
    return g.left.is_atom


def is_right_atomic(g: GameValue) -> bool:
    return g.right.is_atom


def is_purely_atomic(g: GameValue) -> bool:
    return g.left.is_atom and g.right.is_atom


def is_number(g: GameValue) -> bool:
    return g.is_number


def find_guarantee_violation(g: GameValue) -> Optional[GameValue]:
    """
    Locate the first follower whose own atoms break the guaranteed condition.

    Args:
        g: Any game

    Returns:
        The offending follower (pre-order, canonical option order), or None if g is guaranteed
    """
    if g.guaranteed:
        return None
    if not node_is_guaranteed(g.left, g.right):
        return g
    for option in g.left_options + g.right_options:
        found = find_guarantee_violation(option)
        if found is not None:
            return found
    return None


def require_guaranteed(*games: GameValue, operation: str = "this operation") -> None:
    """Raise NotGuaranteedError unless every game is guaranteed."""
    for g in games:
        if not g.guaranteed:
            violation = find_guarantee_violation(g)
            raise NotGuaranteedError(
                f"{operation} requires a guaranteed game",
                detail=f"{g.to_literal()} fails at {violation.to_literal()}",
            )


@cached(cache=_conjugate_cache, key=lambda g: g.id, lock=threading.RLock())
def conjugate(g: GameValue) -> GameValue:
    """Swap Left and Right, negating atoms."""
    return intern(_conjugate_side(g.right), _conjugate_side(g.left))


def _conjugate_side(side: Side) -> Side:
    if side.is_atom:
        return Side.of_atom(-side.atom)
    return Side.of_options(conjugate(option) for option in side.options)


def _sum_key(g: GameValue, h: GameValue) -> tuple:
    return (g.id, h.id) if g.id <= h.id else (h.id, g.id)


@cached(cache=_sum_cache, key=_sum_key, lock=threading.RLock())
def sum(g: GameValue, h: GameValue) -> GameValue:
    """
    Disjunctive sum G + H.

    On each side atoms add when both summands are atomic there; otherwise the
    side holds G^L + H and G + H^L over whichever option sets exist.
    """
    left = _sum_side(g.left, h.left, g, h)
    right = _sum_side(g.right, h.right, g, h)
    return intern(left, right)


def _sum_side(g_side: Side, h_side: Side, g: GameValue, h: GameValue) -> Side:
    if g_side.is_atom and h_side.is_atom:
        return Side.of_atom(g_side.atom + h_side.atom)
    options = [sum(option, h) for option in g_side.options]
    options.extend(sum(g, option) for option in h_side.options)
    return Side.of_options(options)


def sum_all(games: Iterable[GameValue]) -> GameValue:
    """Fold a sequence of games with the disjunctive sum; the empty sum is 0."""
    total = number(0)
    for g in games:
        total = sum(total, g)
    return total


def difference(g: GameValue, h: GameValue) -> GameValue:
    """G - H, i.e. G + conjugate(H)."""
    return sum(g, conjugate(h))


@cached(cache=_embed_cache, lock=threading.RLock())
def embed_normal_play(tree: NormalPlayTree) -> GameValue:
    """Embed a Normal-play game by replacing each empty option set with ∅^0."""
    return intern(_embed_side(tree.left), _embed_side(tree.right))


def _embed_side(options) -> Side:
    if not options:
        return Side.of_atom(0)
    return Side.of_options(embed_normal_play(option) for option in options)


def replace_atoms(g: GameValue, f: Callable[[Score], Score]) -> GameValue:
    """Rebuild g with every atom t replaced by f(t)."""
    memo: Dict[int, GameValue] = {}

    def rebuild(node: GameValue) -> GameValue:
        if node.id not in memo:
            memo[node.id] = intern(rebuild_side(node.left), rebuild_side(node.right))
        return memo[node.id]

    def rebuild_side(side: Side) -> Side:
        if side.is_atom:
            return Side.of_atom(f(side.atom))
        return Side.of_options(rebuild(option) for option in side.options)

    return rebuild(g)


def translate(g: GameValue, x) -> GameValue:
    """Shift every atom of g by x; structurally equal to g + x."""
    shift = to_score(x)
    return replace_atoms(g, lambda t: t + shift)


def projections(g: GameValue) -> Projections:
    """Atom extremes of g and the games with all atoms set to them."""
    low, high = g.min_atom, g.max_atom
    return Projections(
        min_score=low,
        max_score=high,
        m_abs=max(abs(low), abs(high)),
        g_min=replace_atoms(g, lambda _: low),
        g_max=replace_atoms(g, lambda _: high),
    )


def atoms(g: GameValue) -> set:
    """All atom scores occurring anywhere in g."""
    found = set()
    seen = set()
    stack = [g]
    while stack:
        node = stack.pop()
        if node.id in seen:
            continue
        seen.add(node.id)
        for side in (node.left, node.right):
            if side.is_atom:
                found.add(side.atom)
            else:
                stack.extend(side.options)
    return found
