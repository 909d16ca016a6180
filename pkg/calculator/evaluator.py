"""
Evaluation of calculator expressions against a set of named bindings.
"""

from typing import Mapping

from calculator.expressions import (
    Canon,
    Comparison,
    Conjugate,
    Expr,
    Hat,
    Literal,
    Name,
    RulesetCall,
    Sum,
)
from core.exceptions import InvalidArgumentError, UnboundNameError
from engine import canonical_form, compare, conjugate, hat, sum
from models.game import GameValue
from models.results import OrderResult
from rulesets.registry import build_game


def evaluate(expr: Expr, bindings: Mapping[str, GameValue]) -> GameValue:
    """
    Evaluate an expression to a game value.

    Literals may be non-guaranteed; canon() and comparisons reject such values.
    """
    match expr:
        case Literal(value=value):
            return value
        case Name(name=name):
            if name not in bindings:
                raise UnboundNameError(name)
            return bindings[name]
        case Sum(left=left, right=right):
            return sum(evaluate(left, bindings), evaluate(right, bindings))
        case Conjugate(operand=operand):
            return conjugate(evaluate(operand, bindings))
        case Hat(n=n):
            return hat(n)
        case Canon(operand=operand):
            return canonical_form(evaluate(operand, bindings))
        case RulesetCall(ruleset=ruleset, scores=scores):
            return build_game(ruleset, scores)
        case Comparison():
            raise InvalidArgumentError("a comparison does not evaluate to a game")
    raise InvalidArgumentError(f"cannot evaluate {expr!r}")


def evaluate_comparison(expr: Comparison, bindings: Mapping[str, GameValue]) -> OrderResult:
    """Evaluate both operands and compare them in both directions."""
    return compare(evaluate(expr.left, bindings), evaluate(expr.right, bindings))
