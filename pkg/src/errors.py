"""
src/errors.py

Exception types shared by every package.

Everything derives from ArborError, which is itself a ValueError, so code
that only knows about ValueError keeps working. The CLI maps each class to
its own exit code (see EXIT_CODES).
"""

from typing import Optional


class ArborError(ValueError):
    """Base class for all library errors."""


class TreeParseError(ArborError):
    """A tree literal does not match the grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnbalancedError(TreeParseError):
    """Parentheses in a tree literal do not balance."""


class CapExceededError(ArborError):
    """A degree is beyond the configured resource cap."""

    def __init__(self, what: str, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"{what}: degree {degree} exceeds cap {cap}")


class DegreeError(ArborError):
    """Degrees of arguments are incompatible with the operation."""


class EmptySetError(ArborError):
    """An operation needs a non-empty TreeSet."""


class DendriformUnitError(ArborError):
    """The split of 1 * 1 (or substitution of a scalar) is undefined."""


class GeometryError(ArborError):
    """Point configuration is degenerate for the facet engine."""


class ConfigError(ArborError):
    """An environment override could not be read."""


# Exit codes used by main.py. 1 is reserved for failed checks and 2 for
# argparse usage errors.
EXIT_CODES = {
    TreeParseError: 3,
    CapExceededError: 4,
    DegreeError: 5,
    EmptySetError: 5,
    DendriformUnitError: 5,
    GeometryError: 5,
    ConfigError: 6,
}


def exit_code_for(error: BaseException) -> int:
    """Return the CLI exit code for an exception (most specific class wins)."""
    for cls in type(error).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return 5 if isinstance(error, ArborError) else 1
