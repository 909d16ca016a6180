class ScoringGameError(Exception):
    """Base class for calculator and engine errors"""

    def __init__(self, message: str, detail: str = None):
        self.message = message
        self.detail = detail
        super().__init__(message)


class InvalidArgumentError(ScoringGameError):
    def __init__(self, message: str = "Invalid argument", detail: str = None):
        super().__init__(message=message, detail=detail)


class NotGuaranteedError(ScoringGameError):
    def __init__(self, message: str = "game is not guaranteed", detail: str = None):
        super().__init__(message=message, detail=detail)


class ParseError(ScoringGameError):
    def __init__(self, message: str = "Syntax error", position: int = None, detail: str = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message=message, detail=detail)


class UnboundNameError(ScoringGameError):
    def __init__(self, name: str, detail: str = None):
        self.name = name
        super().__init__(message=f"unbound name '{name}'", detail=detail)


class EnumerationLimitError(ScoringGameError):
    def __init__(self, message: str = "Enumeration exceeds the configured cap", detail: str = None):
        super().__init__(message=message, detail=detail)


class EngineInvariantError(ScoringGameError):
    def __init__(self, message: str = "Engine invariant violated", detail: str = None):
        super().__init__(message=message, detail=detail)


class RulesetError(ScoringGameError):
    def __init__(self, message: str = "Ruleset produced an invalid game", detail: str = None):
        super().__init__(message=message, detail=detail)


class SessionFileError(ScoringGameError):
    def __init__(self, message: str = "Malformed session file", detail: str = None):
        super().__init__(message=message, detail=detail)


class ConfigurationError(ScoringGameError):
    def __init__(self, message: str = "Invalid configuration", detail: str = None):
        super().__init__(message=message, detail=detail)
