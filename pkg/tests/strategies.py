from fractions import Fraction

from hypothesis import strategies as st

from engine import make
from models.normal_play import NormalPlayTree


SMALL_SCORES = (Fraction(-1), Fraction(0), Fraction(1))
GRID_SCORES = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


def scores(values=GRID_SCORES):
    return st.sampled_from(values)


def guaranteed_games(max_depth=2, values=SMALL_SCORES, max_options=2):
    """Guaranteed games of birthday <= max_depth, guaranteed by construction:
    a Left atom is drawn at or below every atom on the Right, and vice versa."""
    values = tuple(sorted(values))

    @st.composite
    def build(draw, depth):
        left_atomic = depth == 0 or draw(st.booleans())
        right_atomic = depth == 0 or draw(st.booleans())
        left = None if left_atomic else draw(st.lists(build(depth - 1), min_size=1, max_size=max_options))
        right = None if right_atomic else draw(st.lists(build(depth - 1), min_size=1, max_size=max_options))

        if left is None and right is None:
            a, b = draw(st.sampled_from(values)), draw(st.sampled_from(values))
            return make(min(a, b), max(a, b))
        if left is None:
            bound = min(g.min_atom for g in right)
            return make(draw(st.sampled_from([v for v in values if v <= bound])), right)
        if right is None:
            bound = max(g.max_atom for g in left)
            return make(left, draw(st.sampled_from([v for v in values if v >= bound])))
        return make(left, right)

    return build(max_depth)


def normal_play_trees(max_depth=2):
    @st.composite
    def build(draw, depth):
        if depth == 0:
            return NormalPlayTree()
        child = build(depth - 1)
        left = draw(st.lists(child, max_size=2))
        right = draw(st.lists(child, max_size=2))
        return NormalPlayTree.of(left, right)

    return build(max_depth)


def structurally_equal(g, h) -> bool:
    """Deep comparison that ignores interning."""
    for a, b in ((g.left, h.left), (g.right, h.right)):
        if a.is_atom != b.is_atom:
            return False
        if a.is_atom:
            if a.atom != b.atom:
                return False
        elif len(a.options) != len(b.options) or not all(
            structurally_equal(x, y) for x, y in zip(a.options, b.options)
        ):
            return False
    return True


def all_normal_play_trees(day):
    """Every Normal-play game tree born by the given day (as option sets)."""
    from itertools import combinations

    trees = [NormalPlayTree()]
    for _ in range(day):
        subsets = [c for k in range(len(trees) + 1) for c in combinations(trees, k)]
        trees = list({NormalPlayTree.of(l, r) for l in subsets for r in subsets})
    return trees


def normal_play_ge(g, h, _memo={}):
    """Normal-play order: G >= H iff no G^R <= H and no H^L >= G."""
    key = (g, h)
    if key not in _memo:
        _memo[key] = (
            not any(normal_play_ge(h, gr) for gr in g.right)
            and not any(normal_play_ge(hl, g) for hl in h.left)
        )
    return _memo[key]
