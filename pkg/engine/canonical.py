"""
Reductions and canonical forms.

Left-side reductions are found directly; Right-side reductions are the Left
reductions of the conjugate, mapped back. Steps are scanned in a fixed order:
dominated options, then non-atomic reversible options, then atomic reversible
options, Left before Right within each stage.
"""

import dataclasses
import threading
from typing import Callable, Dict, Iterator, List, Optional, Sequence

from cachetools import cached

from core.exceptions import EngineInvariantError, InvalidArgumentError
from engine.game import conjugate, difference, hat, make, number, require_guaranteed, sum
from engine.order import _ge, equivalent
from engine.stops import ls, ls_under, rs, rs_under
from models.game import GameValue, Side
from models.results import Player, ReductionKind, ReductionStep
from utils.logger import logger


StepChooser = Callable[[Sequence[ReductionStep]], ReductionStep]

_canonical_cache: Dict[int, GameValue] = {}


def _mirror(step: ReductionStep) -> ReductionStep:
    """Map a Left step found on conj(G) to the Right step on G."""
    return dataclasses.replace(
        step,
        side=Player.RIGHT,
        target=conjugate(step.target),
        reversing=None if step.reversing is None else conjugate(step.reversing),
        replacement=tuple(conjugate(g) for g in step.replacement),
        score=None if step.score is None else -step.score,
    )


def _dominated_left(g: GameValue) -> Iterator[ReductionStep]:
    options = g.left_options
    if len(options) < 2:
        return
    for i, a in enumerate(options):
        for j, b in enumerate(options):
            if i == j or not _ge(b, a):
                continue
            # equivalent pair: the canonically first one stays
            if j > i and _ge(a, b):
                continue
            yield ReductionStep(ReductionKind.REMOVE_DOMINATED, Player.LEFT, a, reversing=b)
            break


def _reversing_options(g: GameValue, a: GameValue, atomic: bool) -> Iterator[GameValue]:
    for b in a.right_options:
        if b.left.is_atom == atomic and _ge(g, b):
            yield b


def _non_atomic_left(g: GameValue) -> Iterator[ReductionStep]:
    for a in g.left_options:
        b = next(_reversing_options(g, a, atomic=False), None)
        if b is not None:
            yield ReductionStep(
                ReductionKind.BYPASS_NON_ATOMIC_REVERSIBLE,
                Player.LEFT,
                a,
                reversing=b,
                replacement=b.left_options,
            )


def _atomic_left(g: GameValue) -> Iterator[ReductionStep]:
    for a in g.left_options:
        b = next(_reversing_options(g, a, atomic=True), None)
        if b is None:
            continue
        step = _atomic_step(g, a, b)
        if step is not None:
            yield step


def _atomic_step(g: GameValue, a: GameValue, b: GameValue) -> Optional[ReductionStep]:
    ell = b.left.atom
    target = ls_under(g)
    others = [c for c in g.left_options if c is not a]

    if any(rs_under(c) == target for c in others):
        return ReductionStep(ReductionKind.DROP_ATOMIC_REVERSIBLE, Player.LEFT, a, reversing=b, score=ell)

    if rs_under(a) != target:
        raise EngineInvariantError(
            "atomic-reversible option attains no pass-allowed stop",
            detail=f"option {a.to_literal()} of {g.to_literal()}",
        )

    n = min_waiting_index(g, ell, bound=b.birthday)
    replacement = canonical_form(difference(number(ell), hat(n + 1)))
    if replacement is not a:
        return ReductionStep(
            ReductionKind.REPLACE_ATOMIC_REVERSIBLE,
            Player.LEFT,
            a,
            reversing=b,
            replacement=(replacement,),
            score=ell,
            waiting_index=n,
        )

    if not others and make(Side.of_atom(ell), g.right).guaranteed:
        return ReductionStep(
            ReductionKind.SUBSTITUTE_LONE_ATOMIC,
            Player.LEFT,
            a,
            reversing=b,
            score=ell,
            waiting_index=n,
        )
    return None


def _stage(g: GameValue, finder: Callable[[GameValue], Iterator[ReductionStep]]) -> Iterator[ReductionStep]:
    yield from finder(g)
    for step in finder(conjugate(g)):
        yield _mirror(step)


def _iter_steps(g: GameValue) -> Iterator[ReductionStep]:
    yield from _stage(g, _dominated_left)
    yield from _stage(g, _non_atomic_left)
    yield from _stage(g, _atomic_left)


def find_dominated(g: GameValue) -> Optional[ReductionStep]:
    """First dominated option, Left side before Right, or None."""
    require_guaranteed(g, operation="domination search")
    return next(_stage(g, _dominated_left), None)


def find_reversible(g: GameValue) -> Optional[ReductionStep]:
    """First applicable reversibility step (non-atomic before atomic), or None."""
    require_guaranteed(g, operation="reversibility search")
    step = next(_stage(g, _non_atomic_left), None)
    if step is None:
        step = next(_stage(g, _atomic_left), None)
    return step


def applicable_steps(g: GameValue) -> List[ReductionStep]:
    """Every reduction applicable at the root of g, in scan order."""
    require_guaranteed(g, operation="reduction")
    return list(_iter_steps(g))


def min_waiting_index(g: GameValue, ell, bound: Optional[int] = None) -> int:
    """
    Smallest n >= 0 with G ≽ ℓ - n̂.

    Args:
        g: A guaranteed game
        ell: The atom of the reversing option
        bound: Birthday of the reversing option, where the search is known to succeed;
            defaults to b(G)

    Returns:
        The least such n
    """
    require_guaranteed(g, operation="waiting-index search")
    cap = (g.birthday if bound is None else bound) + 1
    base = number(ell)
    for n in range(cap + 1):
        if _ge(g, difference(base, hat(n))):
            return n
    raise EngineInvariantError(
        f"no waiting index up to {cap} for {g.to_literal()} and {base.to_literal()}",
        detail="the option is not reversible",
    )


def apply_step(g: GameValue, step: ReductionStep) -> GameValue:
    """Apply one reduction to the root of g."""
    side = g.left if step.side is Player.LEFT else g.right
    if step.target not in side.options:
        raise InvalidArgumentError(
            f"{step.target.to_literal()} is not a {step.side.value} option of {g.to_literal()}"
        )
    remaining = [option for option in side.options if option is not step.target]

    if step.kind is ReductionKind.SUBSTITUTE_LONE_ATOMIC:
        new_side = Side.of_atom(step.score)
    else:
        new_side = Side.of_options(remaining + list(step.replacement))

    if step.side is Player.LEFT:
        return make(new_side, g.right)
    return make(g.left, new_side)


def _rebuild(g: GameValue, reduce_option: Callable[[GameValue], GameValue]) -> GameValue:
    def side(s: Side) -> Side:
        if s.is_atom:
            return s
        return Side.of_options(reduce_option(option) for option in s.options)
    return make(side(g.left), side(g.right))


def _first(steps: Iterator[ReductionStep]) -> Optional[ReductionStep]:
    return next(steps, None)


def _fixpoint(g: GameValue, pick: Callable[[Iterator[ReductionStep]], Optional[ReductionStep]]) -> GameValue:
    current = g
    while True:
        step = pick(_iter_steps(current))
        if step is None:
            return current
        if logger.debug_mode:
            logger.debug("reduce: {} in {}", step.describe(), current.to_literal())
        current = apply_step(current, step)


@cached(cache=_canonical_cache, key=lambda g: g.id, lock=threading.RLock())
def _canonical(g: GameValue) -> GameValue:
    return _fixpoint(_rebuild(g, _canonical), _first)


def canonical_form(g: GameValue) -> GameValue:
    """
    The unique reduced game equivalent to g.

    Options are canonicalized first, then root reductions are applied until
    none is left.
    """
    require_guaranteed(g, operation="canonical form")
    return _canonical(g)


def reduce(g: GameValue, choose: Optional[StepChooser] = None) -> GameValue:
    """
    Reduce g bottom-up, letting ``choose`` pick among the applicable steps.

    With the default chooser this equals canonical_form; any other admissible
    order reaches the same game.
    """
    require_guaranteed(g, operation="reduction")
    if choose is None:
        return _canonical(g)

    def pick(steps: Iterator[ReductionStep]) -> Optional[ReductionStep]:
        candidates = list(steps)
        return choose(candidates) if candidates else None

    memo: Dict[int, GameValue] = {}

    def reduce_node(node: GameValue) -> GameValue:
        if node.id not in memo:
            memo[node.id] = _fixpoint(_rebuild(node, reduce_node), pick)
        return memo[node.id]

    return reduce_node(g)


def is_reduced(g: GameValue) -> bool:
    """True when no reduction applies to g or to any of its followers."""
    require_guaranteed(g, operation="reduction check")
    seen = set()
    stack = [g]
    while stack:
        node = stack.pop()
        if node.id in seen:
            continue
        seen.add(node.id)
        if next(_iter_steps(node), None) is not None:
            return False
        stack.extend(node.left_options + node.right_options)
    return True


def is_zugzwang(g: GameValue) -> bool:
    """Moving hurts: Ls(G) < Rs(G)."""
    return ls(g) < rs(g)


def invertible(g: GameValue) -> bool:
    """
    Whether some game cancels g; by the Conjugate Property only conj(G) can.

    Zugzwangs are never invertible.
    """
    require_guaranteed(g, operation="invertibility")
    if is_zugzwang(g):
        return False
    return equivalent(sum(g, conjugate(g)), number(0))


def inverse(g: GameValue) -> Optional[GameValue]:
    return conjugate(g) if invertible(g) else None
