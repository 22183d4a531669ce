"""Exception hierarchy shared by every module."""

from __future__ import annotations


class InputError(ValueError):
    """Invalid arguments or malformed graph data."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ImproperColoringError(InputError):
    """A coloring assigns the same color to both ends of an edge."""

    def __init__(self, edge: tuple[int, int], color: int):
        self.edge = edge
        self.color = color
        super().__init__(
            f"monochromatic edge ({edge[0]}, {edge[1]}): both endpoints have color {color}"
        )


class NumericalError(ArithmeticError):
    """An iterative numerical routine failed to converge."""
