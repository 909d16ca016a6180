"""
Commands that evaluate and inspect game values.
"""

import re

from calculator.evaluator import evaluate, evaluate_comparison
from calculator.expressions import Comparison
from calculator.parser import KEYWORDS, parse_expression, parse_pair
from commands.context import CommandContext
from core.exceptions import InvalidArgumentError
from engine import canonical_form, invertible, stop_table
from models.game import GameValue


_LET = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$", re.DOTALL)


def _value(argument: str, context: CommandContext) -> GameValue:
    if not argument.strip():
        raise InvalidArgumentError("missing expression")
    return evaluate(parse_expression(argument), context.session.bindings)


def _boolean(flag: bool) -> str:
    return "true" if flag else "false"


def let_command(argument: str, context: CommandContext) -> str:
    """Bind a name: ``let NAME = EXPR``."""
    match = _LET.match(argument.strip())
    if not match:
        raise InvalidArgumentError("usage: let NAME = EXPR")
    name, expression = match.groups()
    if name in KEYWORDS:
        raise InvalidArgumentError(f"'{name}' is reserved")
    value = _value(expression, context)
    context.session.bind(name, value)
    return f"{name} = {context.render(value)}"


def show_command(argument: str, context: CommandContext) -> str:
    return context.render(_value(argument, context))


def canon_command(argument: str, context: CommandContext) -> str:
    return context.render(canonical_form(_value(argument, context)))


def cmp_command(argument: str, context: CommandContext) -> str:
    left, right = parse_pair(argument)
    return evaluate_comparison(Comparison(left, right), context.session.bindings).symbol


def stops_command(argument: str, context: CommandContext) -> str:
    return ", ".join(f"{label} = {value}" for label, value in stop_table(_value(argument, context)))


def guaranteed_command(argument: str, context: CommandContext) -> str:
    return _boolean(_value(argument, context).guaranteed)


def invertible_command(argument: str, context: CommandContext) -> str:
    return _boolean(invertible(_value(argument, context)))


def birthday_command(argument: str, context: CommandContext) -> str:
    return str(_value(argument, context).birthday)
