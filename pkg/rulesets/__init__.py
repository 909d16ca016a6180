"""
Rulesets package: board positions and their conversion to game values.
"""

from .position import Position, to_game
from .pickends import PickEndsPosition, from_pieces, moves
from .registry import (
    RulesetRegistry,
    build_game,
    get_ruleset_names,
    list_available_rulesets,
    register_ruleset,
    unregister_ruleset,
)

__all__ = [
    # Positions
    'Position',
    'PickEndsPosition',
    'from_pieces',
    'moves',
    'to_game',

    # Registry
    'RulesetRegistry',
    'build_game',
    'get_ruleset_names',
    'list_available_rulesets',
    'register_ruleset',
    'unregister_ruleset',
]
