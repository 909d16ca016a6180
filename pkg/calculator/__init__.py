"""
Calculator front end: grammar, evaluation, formatting and sessions.
"""

from .expressions import Expr
from .formatter import format_game
from .parser import parse_expression, parse_game, parse_pair
from .evaluator import evaluate, evaluate_comparison
from .session import Session

__all__ = [
    'Expr',
    'Session',
    'evaluate',
    'evaluate_comparison',
    'format_game',
    'parse_expression',
    'parse_game',
    'parse_pair',
]
