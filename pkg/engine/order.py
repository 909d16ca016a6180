"""
The order relation on guaranteed games.
Constructive comparison, linkedness, adjoints, s-protection and a brute-force oracle.
"""

import threading
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from cachetools import cached

from config.settings import get_engine_config
from core.exceptions import InvalidArgumentError
from engine.enumeration import enumerate_guaranteed
from engine.game import Score, conjugate, make, require_guaranteed, sum, to_score
from engine.stops import ls, ls_under, rs, rs_over
from models.game import GameValue
from models.results import OracleResult, OrderResult


class ComparisonCache:
    """
    Memo table for G >= H keyed on ordered id pairs.

    Entries are final: the relation is a pure function of the pair.
    """

    def __init__(self):
        self.table: Dict[Tuple[int, int], bool] = {}
        self.lock = threading.RLock()

    def lookup(self, g: GameValue, h: GameValue) -> Optional[bool]:
        with self.lock:
            return self.table.get((g.id, h.id))

    def store(self, g: GameValue, h: GameValue, result: bool) -> None:
        with self.lock:
            self.table[(g.id, h.id)] = result


# Global comparison cache
_comparisons = ComparisonCache()

_left_protected_cache: Dict[tuple, bool] = {}
_right_protected_cache: Dict[tuple, bool] = {}


def get_comparison_cache() -> ComparisonCache:
    return _comparisons


def ge(g: GameValue, h: GameValue) -> bool:
    """
    Decide G ≽ H.

    Args:
        g: A guaranteed game
        h: A guaranteed game

    Returns:
        True when G is at least as good as H for Left in every context
    """
    require_guaranteed(g, h, operation="comparison")
    return _ge(g, h)


def _ge(g: GameValue, h: GameValue) -> bool:
    if g is h:
        return True
    known = _comparisons.lookup(g, h)
    if known is not None:
        return known
    result = _constructive_ge(g, h)
    _comparisons.store(g, h, result)
    return result


def _constructive_ge(g: GameValue, h: GameValue) -> bool:
    if ls_under(g) < ls_under(h) or rs_over(g) < rs_over(h):
        return False
    for hl in h.left_options:
        if not (any(_ge(gl, hl) for gl in g.left_options)
                or any(_ge(g, hlr) for hlr in hl.right_options)):
            return False
    for gr in g.right_options:
        if not (any(_ge(gr, hr) for hr in h.right_options)
                or any(_ge(grl, h) for grl in gr.left_options)):
            return False
    return True


def le(g: GameValue, h: GameValue) -> bool:
    return ge(h, g)


def compare(g: GameValue, h: GameValue) -> OrderResult:
    """Compare in both directions."""
    require_guaranteed(g, h, operation="comparison")
    return OrderResult(ge=_ge(g, h), le=_ge(h, g))


def equivalent(g: GameValue, h: GameValue) -> bool:
    result = compare(g, h)
    return result.ge and result.le


def linked(g: GameValue, h: GameValue) -> bool:
    """G is linked to H iff no G^L ≽ H and no H^R ≼ G."""
    require_guaranteed(g, h, operation="linkedness")
    if any(_ge(gl, h) for gl in g.left_options):
        return False
    return not any(_ge(g, hr) for hr in h.right_options)


def adjoint(g: GameValue, r=0, s=0) -> GameValue:
    """The (r, s)-adjoint: conj(G) + ⟨∅^(-m-r-1) | ∅^(m+s+1)⟩ with m the largest |atom| of G."""
    r, s = to_score(r), to_score(s)
    if r < 0 or s < 0:
        raise InvalidArgumentError(f"adjoint parameters must be nonnegative, got r={r}, s={s}")
    require_guaranteed(g, operation="adjoint")
    m = max(abs(g.min_atom), abs(g.max_atom))
    return sum(conjugate(g), make(-m - r - 1, m + s + 1))


def left_s_protected(g: GameValue, s) -> bool:
    """
    Left can guarantee at least s when Right moves first, even allowing Right to pass.

    Equivalent to G ≽ s.
    """
    s = to_score(s)
    require_guaranteed(g, operation="left-s-protection")
    return _left_protected(g, s)


@cached(cache=_left_protected_cache, key=lambda g, s: (g.id, s), lock=threading.RLock())
def _left_protected(g: GameValue, s: Fraction) -> bool:
    if ls_under(g) < s:
        return False
    if g.right.is_atom:
        return True
    # a left-atomic G^R has no G^RL and fails here
    return all(
        any(_left_protected(grl, s) for grl in gr.left_options)
        for gr in g.right_options
    )


def right_s_protected(g: GameValue, s) -> bool:
    """Mirror of left_s_protected; equivalent to s ≽ G."""
    s = to_score(s)
    require_guaranteed(g, operation="right-s-protection")
    return _right_protected(g, s)


@cached(cache=_right_protected_cache, key=lambda g, s: (g.id, s), lock=threading.RLock())
def _right_protected(g: GameValue, s: Fraction) -> bool:
    if rs_over(g) > s:
        return False
    if g.left.is_atom:
        return True
    return all(
        any(_right_protected(glr, s) for glr in gl.right_options)
        for gl in g.left_options
    )


def oracle_ge(
    g: GameValue,
    h: GameValue,
    max_birthday: int,
    score_set: Iterable[Score],
    max_options: Optional[int] = None,
    max_candidates: Optional[int] = None,
) -> OracleResult:
    """
    Search small contexts X for a refutation of G ≽ H.

    A witness X has Ls(G+X) < Ls(H+X) or Rs(G+X) < Rs(H+X) and proves G is not
    ≽ H; finding none is evidence only.

    Args:
        g: A guaranteed game
        h: A guaranteed game
        max_birthday: Largest birthday of the contexts tried
        score_set: Atoms the contexts may use
        max_options: Option-set width of the contexts; defaults to the engine configuration
        max_candidates: Enumeration cap; defaults to the engine configuration

    Returns:
        The first witness in enumeration order (or None) and how many contexts were examined
    """
    require_guaranteed(g, h, operation="oracle comparison")
    if max_options is None:
        max_options = get_engine_config()['oracle_max_options']
    contexts = enumerate_guaranteed(max_birthday, score_set, max_options, max_candidates)
    for examined, x in enumerate(contexts, start=1):
        gx, hx = sum(g, x), sum(h, x)
        if ls(gx) < ls(hx) or rs(gx) < rs(hx):
            return OracleResult(witness=x, examined=examined)
    return OracleResult(witness=None, examined=len(contexts))
