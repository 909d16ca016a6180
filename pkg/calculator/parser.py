"""
Grammar and parser for game literals and calculator expressions.

Literals:   game := waiting | score | '<' side '|' side '>'
            side := item (',' item)*      item := 'E' score | '∅^' score | game
            waiting := score ('+'|'-') '^' n | ['-'] '^' n
Expressions add sums, differences, unary '-', hat(n), conj(e), canon(e),
ruleset calls such as ``pickends [1, 2]``, names and parentheses.
"""

import threading
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Tuple

from arpeggio import EOF, NoMatch, Optional, ParserPython, PTNodeVisitor, ZeroOrMore, visit_parse_tree
from arpeggio import RegExMatch as _

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
from core.exceptions import InvalidArgumentError, ParseError
from engine.game import conjugate, hat, make, number, to_score, translate
from models.game import GameValue, Side


# --- Literal grammar ---

def score():        return _(r"-?\d+(?:\.\d+|/\d+)?")
def natural():      return _(r"\d+")
def minus():        return "-"
def sign():         return _(r"[+-]")
def atom_marker():  return _(r"E|∅\^")
def atom():         return atom_marker, score
def waiting():      return [(score, sign, "^", natural), (Optional(minus), "^", natural)]
def side_item():    return [atom, game]
def side():         return side_item, ZeroOrMore(",", side_item)
def braced():       return "<", side, "|", side, ">"
def game():         return [waiting, score, braced]


# --- Expression grammar ---

KEYWORDS = ("hat", "conj", "canon")

def name():          return _(r"(?!(?:hat|conj|canon)\b)[A-Za-z_][A-Za-z0-9_]*")
def ruleset_name():  return _(r"[A-Za-z_][A-Za-z0-9_]*(?=\s*\[)")
def operator():      return _(r"[+-]")
def hat_call():      return _(r"hat\b"), "(", natural, ")"
def conj_call():     return _(r"conj\b"), "(", expression, ")"
def canon_call():    return _(r"canon\b"), "(", expression, ")"
def ruleset_call():  return ruleset_name, "[", Optional(score, ZeroOrMore(",", score)), "]"
def group():         return "(", expression, ")"
def negation():      return minus, term
def term():          return [hat_call, conj_call, canon_call, ruleset_call, game, negation, name, group]
def expression():    return term, ZeroOrMore(operator, term)


# --- Entry rules ---

def game_line():        return game, EOF
def expression_line():  return expression, EOF
def pair_line():        return expression, ",", expression, EOF


class Sign(Enum):
    PLUS = 1
    MINUS = -1


class _Atom(NamedTuple):
    score: Fraction


class _RulesetName(NamedTuple):
    name: str


class GameVisitor(PTNodeVisitor):
    """Builds GameValues from literal parse trees and Expr nodes from expressions."""

    def visit__default__(self, node, children):
        if not children and hasattr(node, 'value'):
            return node.value
        return children

    # --- literals ---

    def visit_score(self, node, children):
        try:
            return to_score(node.value)
        except InvalidArgumentError as e:
            raise ParseError(e.message, position=node.position) from e

    def visit_natural(self, node, children):
        return int(node.value)

    def visit_minus(self, node, children):
        return Sign.MINUS

    def visit_sign(self, node, children):
        return Sign.MINUS if node.value == "-" else Sign.PLUS

    visit_operator = visit_sign

    def visit_atom(self, node, children):
        return _Atom(next(c for c in children if isinstance(c, Fraction)))

    def visit_waiting(self, node, children):
        base = next((c for c in children if isinstance(c, Fraction)), Fraction(0))
        direction = next((c for c in children if isinstance(c, Sign)), Sign.PLUS)
        n = next(c for c in children if isinstance(c, int) and not isinstance(c, Fraction))
        waiting_move = hat(n) if direction is Sign.PLUS else conjugate(hat(n))
        return translate(waiting_move, base)

    def visit_side_item(self, node, children):
        return children[0]

    def visit_side(self, node, children):
        items = [c for c in children if isinstance(c, (_Atom, GameValue))]
        atoms = [c for c in items if isinstance(c, _Atom)]
        if atoms and len(items) > 1:
            raise ParseError("cannot mix an atom with options in one side", position=node.position)
        if atoms:
            return Side.of_atom(atoms[0].score)
        return Side.of_options(items)

    def visit_braced(self, node, children):
        left, right = [c for c in children if isinstance(c, Side)]
        return make(left, right)

    def visit_game(self, node, children):
        value = children[0]
        if isinstance(value, Fraction):
            return number(value)
        return value

    def visit_game_line(self, node, children):
        return children[0]

    # --- expressions ---

    def visit_name(self, node, children):
        return Name(node.value)

    def visit_ruleset_name(self, node, children):
        return _RulesetName(node.value)

    def visit_hat_call(self, node, children):
        return Hat(next(c for c in children if isinstance(c, int)))

    def visit_conj_call(self, node, children):
        return Conjugate(_expressions(children)[0])

    def visit_canon_call(self, node, children):
        return Canon(_expressions(children)[0])

    def visit_ruleset_call(self, node, children):
        ruleset = next(c for c in children if isinstance(c, _RulesetName))
        scores = tuple(c for c in children if isinstance(c, Fraction))
        return RulesetCall(ruleset.name, scores)

    def visit_group(self, node, children):
        return _expressions(children)[0]

    def visit_negation(self, node, children):
        return Conjugate(_expressions(children)[0])

    def visit_term(self, node, children):
        value = children[0]
        if isinstance(value, GameValue):
            return Literal(value)
        return value

    def visit_expression(self, node, children):
        parts = [c for c in children if isinstance(c, Sign) or _is_expr(c)]
        result = parts[0]
        for operator_sign, operand in zip(parts[1::2], parts[2::2]):
            if operator_sign is Sign.MINUS:
                operand = Conjugate(operand)
            result = Sum(result, operand)
        return result

    def visit_expression_line(self, node, children):
        return _expressions(children)[0]

    def visit_pair_line(self, node, children):
        left, right = _expressions(children)
        return Comparison(left, right)


_EXPR_TYPES = (Literal, Name, Sum, Conjugate, Hat, Canon, RulesetCall, Comparison)


def _is_expr(value) -> bool:
    return isinstance(value, _EXPR_TYPES)


def _expressions(children) -> list:
    return [c for c in children if _is_expr(c)]


_PARSER_LOCK = threading.Lock()
_PARSERS = {}


def _get_or_create_parser(root):
    """Get the shared parser for an entry rule, creating it if needed."""
    with _PARSER_LOCK:
        if root not in _PARSERS:
            _PARSERS[root] = ParserPython(root, memoization=True)
        return _PARSERS[root]


def _parse(root, text: str):
    parser = _get_or_create_parser(root)
    with _PARSER_LOCK:
        try:
            tree = parser.parse(text)
        except NoMatch as e:
            raise ParseError("syntax error", position=e.position, detail=str(e)) from e
    return visit_parse_tree(tree, GameVisitor())


def parse_game(text: str) -> GameValue:
    """
    Parse a game literal.

    Args:
        text: e.g. ``<E1 | 4, <E3 | 3, <E5|4>>>`` or ``1/2``

    Returns:
        The interned GameValue (not necessarily guaranteed)
    """
    return _parse(game_line, text)


def parse_expression(text: str) -> Expr:
    """Parse a calculator expression into an Expr tree."""
    return _parse(expression_line, text)


def parse_pair(text: str) -> Tuple[Expr, Expr]:
    """Parse ``e1, e2`` into a Comparison node's operands."""
    comparison = _parse(pair_line, text)
    return comparison.left, comparison.right
