"""Homomorphism description validation rules.

A description reads ``{"n": 2, "terminals": [...], "images": {"a.1": [...], ...}}``.
"""

from __future__ import annotations

from typing import Any

from utils.rules import Rule, RuleViolation
from utils.validators import validate_variable_name


def bracket_names(n: int) -> list[str]:
    return [f"a.{i}" for i in range(1, n + 1)] + [f"b.{i}" for i in range(1, n + 1)]


# ============================================================================
# Guard Rules
# ============================================================================

def check_shape(description: Any, **_) -> RuleViolation | None:
    if not isinstance(description, dict):
        return RuleViolation("NOT_AN_OBJECT", type(description).__name__, "object", "homomorphism must be a JSON object")
    missing = [key for key in ("n", "terminals", "images") if key not in description]
    if missing:
        return RuleViolation("MISSING_KEYS", missing, ["n", "terminals", "images"], f"homomorphism lacks {', '.join(missing)}")
    if not isinstance(description["images"], dict):
        return RuleViolation("BAD_IMAGES", description["images"], "object", "images must map letters to word lists")
    return None


def check_bracket_kinds(description: dict[str, Any], **_) -> RuleViolation | None:
    n = description["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        return RuleViolation("BAD_N", n, ">= 1", "n must be a positive integer")
    return None


def check_terminals(description: dict[str, Any], **_) -> list[RuleViolation]:
    terminals = description["terminals"]
    if not isinstance(terminals, list) or not terminals:
        return [RuleViolation("NO_TERMINALS", terminals, "nonempty list", "terminals must be a nonempty list")]
    violations: list[RuleViolation] = []
    seen: set[str] = set()
    for name in terminals:
        err = validate_variable_name(name)
        if err:
            violations.append(RuleViolation("BAD_SYMBOL_NAME", name, "valid name", err))
        elif name in seen:
            violations.append(RuleViolation("DUPLICATE_TERMINAL", name, "unique", f"terminal {name!r} listed twice"))
        seen.add(name)
    return violations


# ============================================================================
# Image Rules (all checked)
# ============================================================================

def check_images_complete(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Exactly the letters a.1..a.n, b.1..b.n carry images."""
    expected = bracket_names(description["n"])
    images = description["images"]
    violations = [
        RuleViolation("MISSING_IMAGE", name, "image", f"letter {name!r} has no image")
        for name in expected
        if name not in images
    ]
    violations.extend(
        RuleViolation("UNKNOWN_LETTER", name, expected, f"{name!r} is not a bracket letter")
        for name in images
        if name not in expected
    )
    return violations


def check_images_over_terminals(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Images are nonempty lists of declared terminals."""
    terminals = set(description["terminals"])
    violations: list[RuleViolation] = []
    for name, image in description["images"].items():
        if not isinstance(image, list) or not image:
            violations.append(RuleViolation("EMPTY_IMAGE", name, "nonempty word", f"image of {name!r} must be a nonempty list"))
            continue
        for symbol in image:
            if symbol not in terminals:
                violations.append(RuleViolation("FOREIGN_TERMINAL", symbol, sorted(terminals), f"image of {name!r} uses unknown terminal {symbol!r}"))
    return violations


# ============================================================================
# Rule Lists
# ============================================================================

HOMOMORPHISM_GUARD_RULES = [
    Rule("SHAPE", check_shape),
    Rule("BRACKET_KINDS", check_bracket_kinds),
    Rule("TERMINALS", check_terminals),
]

HOMOMORPHISM_IMAGE_RULES = [
    Rule("IMAGES_COMPLETE", check_images_complete),
    Rule("IMAGES_OVER_TERMINALS", check_images_over_terminals),
]
