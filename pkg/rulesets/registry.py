"""
Ruleset registry for the Scoring Games Calculator.
Maps ruleset names to position factories so the calculator can build values by name.
"""

from typing import Callable, Dict, List, Sequence

from core.exceptions import RulesetError
from engine.game import Score
from rulesets.pickends import from_pieces
from rulesets.position import Position, to_game


PositionFactory = Callable[[Sequence[Score]], Position]


class RulesetRegistry:
    """Central registry of rulesets that build a start position from a list of scores."""

    def __init__(self):
        """Initialize the ruleset registry."""
        self._factories: Dict[str, PositionFactory] = {}
        self._descriptions: Dict[str, str] = {}

    def register_default_rulesets(self):
        """Register the built-in rulesets."""
        self.register_ruleset("pickends", from_pieces, "take a piece from either end of a row; Left adds, Right subtracts")

    def register_ruleset(self, name: str, factory: PositionFactory, description: str = None):
        """
        Register a ruleset.

        Args:
            name: Name used in expressions, e.g. ``pickends``
            factory: Builds the start position from the bracketed score list
            description: Optional one-line summary
        """
        self._factories[name] = factory
        self._descriptions[name] = description or f"Ruleset: {name}"

    def unregister_ruleset(self, name: str):
        self._factories.pop(name, None)
        self._descriptions.pop(name, None)

    def get_ruleset(self, name: str) -> PositionFactory:
        return self._factories.get(name)

    def get_ruleset_names(self) -> List[str]:
        return list(self._factories.keys())

    def list_rulesets(self) -> str:
        """
        Get a formatted string listing all rulesets.

        Returns:
            One line per ruleset with its description
        """
        if not self._factories:
            return "No rulesets registered."
        lines = ["Available rulesets:"]
        for name, description in self._descriptions.items():
            lines.append(f"  - {name}: {description}")
        return "\n".join(lines)


# Global ruleset registry instance
_ruleset_registry = RulesetRegistry()
_ruleset_registry.register_default_rulesets()


def get_ruleset_names() -> List[str]:
    """Get names of all registered rulesets."""
    return _ruleset_registry.get_ruleset_names()


def register_ruleset(name: str, factory: PositionFactory, description: str = None):
    """Register a new ruleset."""
    _ruleset_registry.register_ruleset(name, factory, description)


def unregister_ruleset(name: str):
    """Remove a ruleset from the registry."""
    _ruleset_registry.unregister_ruleset(name)


def list_available_rulesets() -> str:
    """Get a formatted list of available rulesets."""
    return _ruleset_registry.list_rulesets()


def build_game(name: str, scores: Sequence[Score]):
    """
    Build the value of a ruleset's start position.

    Args:
        name: Registered ruleset name
        scores: Arguments for the ruleset's position factory

    Returns:
        The game value of the position
    """
    factory = _ruleset_registry.get_ruleset(name)
    if not factory:
        raise RulesetError(f"Ruleset '{name}' not found in registry.")
    return to_game(factory(scores))
