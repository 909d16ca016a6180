from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import EngineInvariantError, InvalidArgumentError, NotGuaranteedError
from engine import (
    applicable_steps,
    apply_step,
    canonical_form,
    compare,
    conjugate,
    enumerate_guaranteed,
    equivalent,
    find_dominated,
    find_reversible,
    ge,
    hat,
    inverse,
    invertible,
    is_reduced,
    is_zugzwang,
    ls,
    make,
    min_waiting_index,
    number,
    reduce,
    rs,
    sum,
)
from calculator.parser import parse_game
from models.results import Player, ReductionKind, Relation
from tests.strategies import SMALL_SCORES, guaranteed_games


GOLDEN = "<-1, <E1|<E1|E2>> | <2|2>>"
GOLDEN_CANONICAL = "<-1, <E1|1> | <2|2>>"
GRID = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(2)]


def waiting_difference(n):
    return sum(hat(n), conjugate(hat(n)))


class TestDomination:
    def test_smaller_number_is_removed(self):
        g = make([number(0), number(1)], 1)
        step = find_dominated(g)
        assert step.kind is ReductionKind.REMOVE_DOMINATED
        assert step.side is Player.LEFT
        assert step.target is number(0)
        assert step.describe() == "RemoveDominated Left 0"
        assert apply_step(g, step) is make([number(1)], 1)

    def test_right_side(self):
        g = make(-1, [number(0), number(1)])
        step = find_dominated(g)
        assert step.side is Player.RIGHT
        assert step.target is number(1)

    @pytest.mark.parametrize("literal", ["3", "<0|0>"])
    def test_nothing_to_remove(self, literal):
        assert find_dominated(parse_game(literal)) is None


class TestReversibility:
    def test_lone_atomic_substitution(self):
        s = waiting_difference(1)
        assert s is make([conjugate(hat(1))], [hat(1)])
        step = find_reversible(s)
        assert step.kind is ReductionKind.SUBSTITUTE_LONE_ATOMIC
        assert step.side is Player.LEFT
        assert step.target is conjugate(hat(1))
        assert step.score == 0
        assert apply_step(s, step) is make(0, [hat(1)])

    def test_golden_replacement(self):
        h = parse_game(GOLDEN)
        step = find_reversible(h)
        assert step.kind is ReductionKind.REPLACE_ATOMIC_REVERSIBLE
        assert step.target is make(1, [make(1, 2)])
        assert step.replacement == (make(1, [number(1)]),)
        assert step.score == 1
        assert step.waiting_index == 0

    def test_numbers_are_irreducible(self):
        assert find_reversible(number(4)) is None
        assert applicable_steps(number(4)) == []

    def test_min_waiting_index(self):
        assert min_waiting_index(number(2), 2) == 0
        assert min_waiting_index(hat(2), 0) == 0
        assert min_waiting_index(parse_game(GOLDEN), 1, bound=0) == 0

    def test_min_waiting_index_without_reversibility(self):
        with pytest.raises(EngineInvariantError):
            min_waiting_index(number(0), 5)

    def test_apply_step_checks_the_target(self):
        step = find_dominated(make([number(0), number(1)], 1))
        with pytest.raises(InvalidArgumentError):
            apply_step(make([number(2)], 2), step)

    @given(guaranteed_games())
    def test_every_step_preserves_value(self, g):
        for step in applicable_steps(g):
            reduced = apply_step(g, step)
            assert reduced.guaranteed
            assert equivalent(reduced, g)


def atomic_reversible_left_options(g):
    """Left options A of g with a left-atomic Right option B such that g ≽ B."""
    if g.left.is_atom:
        return []
    return [
        a
        for a in g.left_options
        if any(b.left.is_atom and ge(g, b) for b in a.right_options)
    ]


def avoided(g, a, x):
    return any(rs(sum(a, x)) <= rs(sum(g, xl)) for xl in x.left_options)


class TestWeakAvoidance:
    @pytest.mark.parametrize("literal", [GOLDEN, "<<E0|0> | <0|E0>>"])
    @given(x=guaranteed_games())
    def test_known_reversible_options(self, literal, x):
        g = parse_game(literal)
        options = atomic_reversible_left_options(g)
        assert options
        if x.left.is_atom:
            return
        for a in options:
            assert avoided(g, a, x)

    @given(guaranteed_games(max_depth=3), guaranteed_games())
    def test_no_left_move_in_x_does_worse(self, g, x):
        if x.left.is_atom:
            return
        for a in atomic_reversible_left_options(g):
            assert avoided(g, a, x)

    def test_atomic_steps_target_such_options(self):
        h = parse_game(GOLDEN)
        atomic = {
            ReductionKind.DROP_ATOMIC_REVERSIBLE,
            ReductionKind.REPLACE_ATOMIC_REVERSIBLE,
            ReductionKind.SUBSTITUTE_LONE_ATOMIC,
        }
        targets = [s.target for s in applicable_steps(h) if s.kind in atomic and s.side is Player.LEFT]
        assert targets
        assert set(targets) <= set(atomic_reversible_left_options(h))


class TestCanonicalForm:
    def test_golden(self):
        assert canonical_form(parse_game(GOLDEN)) is parse_game(GOLDEN_CANONICAL)
        assert is_reduced(parse_game(GOLDEN_CANONICAL))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_waiting_moves_cancel(self, n):
        assert canonical_form(waiting_difference(n)) is number(0)

    def test_numbers(self):
        assert canonical_form(number("-3/4")) is number("-3/4")

    def test_not_reduced(self):
        assert not is_reduced(make([number(0), number(1)], 1))

    def test_rejects_non_guaranteed(self):
        with pytest.raises(NotGuaranteedError):
            canonical_form(parse_game("<E1 | 4, <E3 | 3, <E5|4>>>"))

    @given(guaranteed_games())
    def test_reduced_and_equivalent(self, g):
        c = canonical_form(g)
        assert c.guaranteed
        assert is_reduced(c)
        assert compare(c, g).relation is Relation.EQUIVALENT
        assert c.birthday <= g.birthday

    @given(guaranteed_games())
    def test_idempotent(self, g):
        c = canonical_form(g)
        assert canonical_form(c) is c

    @given(guaranteed_games(), st.randoms(use_true_random=False))
    def test_reduction_order_does_not_matter(self, g, rnd):
        assert reduce_randomly(g, rnd) is canonical_form(g)

    @pytest.mark.slow
    @settings(max_examples=200)
    @given(guaranteed_games(max_depth=3), st.randoms(use_true_random=False))
    def test_reduction_order_does_not_matter_on_day_three(self, g, rnd):
        c = canonical_form(g)
        assert reduce_randomly(g, rnd) is c
        assert canonical_form(c) is c
        assert equivalent(c, g)

    @given(guaranteed_games(max_depth=1), guaranteed_games(max_depth=1))
    def test_equivalence_classes_share_a_form(self, g, h):
        assert equivalent(g, h) == (canonical_form(g) is canonical_form(h))

    @pytest.mark.slow
    @settings(max_examples=500)
    @given(guaranteed_games(), guaranteed_games())
    def test_equivalence_classes_share_a_form_on_day_two(self, g, h):
        assert equivalent(g, h) == (canonical_form(g) is canonical_form(h))

    @given(guaranteed_games(), guaranteed_games(max_depth=1))
    def test_extra_left_option_never_hurts(self, g, a):
        if g.left.is_atom:
            return
        bigger = make(list(g.left_options) + [a], g.right)
        if bigger.guaranteed:
            assert ge(bigger, g)


def reduce_randomly(g, rnd):
    return reduce(g, lambda steps: rnd.choice(list(steps)))


class TestInvertibility:
    @pytest.mark.parametrize("ell", GRID)
    @pytest.mark.parametrize("r", GRID)
    def test_purely_atomic(self, ell, r):
        if ell > r:
            return
        assert invertible(make(ell, r)) == (ell == r)

    def test_non_invertible_dicot(self):
        g = make([make([number(-1)], [number(1)])], [number(0)])
        assert not invertible(g)
        assert inverse(g) is None

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_waiting_moves(self, n):
        assert invertible(hat(n))
        assert inverse(hat(n)) is conjugate(hat(n))

    def test_zugzwang(self):
        g = make(0, 5)
        assert is_zugzwang(g)
        assert not invertible(g)

    @given(guaranteed_games())
    def test_zugzwangs_are_never_invertible(self, g):
        if ls(g) < rs(g):
            assert not invertible(g)

    @given(guaranteed_games())
    def test_conjugate_property(self, g):
        assert invertible(g) == equivalent(sum(g, conjugate(g)), number(0))

    @pytest.mark.slow
    def test_corpus(self):
        for g in enumerate_guaranteed(2, SMALL_SCORES, max_options=1):
            if is_zugzwang(g):
                assert not invertible(g), g
            else:
                assert invertible(g) == (canonical_form(sum(g, conjugate(g))) is number(0)), g
