class DomainError(ValueError):
    """An operation was applied outside the subgroup where it is defined."""


class ExprSyntaxError(SyntaxError):
    """Malformed element expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class LevelTooLarge(ValueError):
    pass
