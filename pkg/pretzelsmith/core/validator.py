"""
Validation functions and the error hierarchy shared by the pretzel engines.

This module parses the comma-separated entry form used on the command line
and in the HTTP API, checks raw entry sequences before a diagram is built,
and guards the span law against inputs it is not defined for.
"""

import re
from typing import Iterable, Sequence, Tuple


class PretzelSmithError(Exception):
    """Base class for every domain error raised by pretzelsmith."""


class EntryParseError(PretzelSmithError):
    """Raised when an entry string cannot be parsed into integers."""


class InvalidDiagramError(PretzelSmithError):
    """Raised when an entry sequence cannot describe a pretzel diagram."""


class NotReducedError(PretzelSmithError):
    """Raised when a diagram that must be reduced is not."""


class NotSortedError(PretzelSmithError):
    """Raised when a diagram that must be sorted descending is not."""


_ENTRY_PATTERN = re.compile(r"^[+-]?\d+$")


def parse_entries(text: str) -> Tuple[int, ...]:
    """
    Parse a comma-separated list of signed integers.

    Surrounding parentheses and whitespace are tolerated so that lines of
    the census text output can be pasted back in.

    Args:
        text: Entry string such as ``"2,-3,-4"`` or ``"(2,-3,-4)"``

    Returns:
        Tuple of integer entries

    Raises:
        EntryParseError: If the string is empty or an item is not an integer

    Example:
        >>> parse_entries("2,-3,-4")
        (2, -3, -4)
        >>> parse_entries(" (3, 3, 0, -3) ")
        (3, 3, 0, -3)
    """
    if not isinstance(text, str):
        raise EntryParseError(f"Entries must be a string, got {type(text).__name__}")

    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body.strip():
        raise EntryParseError("Entry list cannot be empty")

    entries = []
    for position, item in enumerate(body.split(","), start=1):
        token = item.strip()
        if not _ENTRY_PATTERN.match(token):
            raise EntryParseError(
                f"Entry {position} is not an integer: '{token}' in '{text}'"
            )
        entries.append(int(token))
    return tuple(entries)


def validate_entries(entries: Iterable[int]) -> Tuple[int, ...]:
    """
    Validate a raw entry sequence and return it as a tuple.

    Args:
        entries: Iterable of signed crossing counts

    Returns:
        The entries as a tuple of Python ints

    Raises:
        InvalidDiagramError: If the sequence is empty or holds a non-integer

    Example:
        >>> validate_entries([2, -3])
        (2, -3)
    """
    try:
        values = tuple(entries)
    except TypeError as e:
        raise InvalidDiagramError(f"Entries must be iterable: {e}") from e

    if not values:
        raise InvalidDiagramError("A pretzel diagram needs at least one entry")

    for i, value in enumerate(values):
        # bool is an int subclass but never a crossing count
        if isinstance(value, bool) or not isinstance(value, int):
            try:
                is_integral = int(value) == value
            except (TypeError, ValueError):
                is_integral = False
            if isinstance(value, bool) or not is_integral:
                raise InvalidDiagramError(
                    f"Entry at index {i} must be an integer, got {value!r}"
                )
    return tuple(int(value) for value in values)


def require_sorted_desc(entries: Sequence[int]) -> None:
    """
    Check that entries are in non-increasing order.

    Raises:
        NotSortedError: If some entry is larger than its predecessor
    """
    for i in range(1, len(entries)):
        if entries[i] > entries[i - 1]:
            raise NotSortedError(
                f"not sorted: entry {entries[i]} follows {entries[i - 1]} in "
                f"{tuple(entries)}"
            )
