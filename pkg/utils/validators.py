"""Name and input validation helpers."""

from __future__ import annotations

import re

_FORBIDDEN_CHARS = re.compile(r"[\s,\"'\[\]{}]")


def validate_variable_name(name: str, max_len: int = 32) -> str | None:
    """Validate an alphabet variable or grammar symbol name.

    Returns an error message string if invalid, or ``None`` if the name is
    acceptable.
    """
    if not isinstance(name, str) or not name:
        return "variable name must be a nonempty string"
    if len(name) > max_len:
        return f"variable name longer than {max_len} characters: {name!r}"
    if _FORBIDDEN_CHARS.search(name):
        return f"variable name contains whitespace or reserved characters: {name!r}"
    return None


def validate_degree_bound(bound: object, name: str = "degree") -> str | None:
    """Validate a truncation bound supplied by a user."""
    if isinstance(bound, bool) or not isinstance(bound, int):
        return f"{name} must be an integer"
    if bound < 0:
        return f"{name} must be nonnegative"
    return None
