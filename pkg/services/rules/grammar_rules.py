"""Grammar description validation rules.

Every check receives the raw JSON-style description as ``description``.
"""

from __future__ import annotations

from typing import Any

from utils.rules import Rule, RuleViolation
from utils.validators import validate_variable_name


def _productions(description: dict[str, Any]) -> list[tuple[str, list[str]]]:
    return [(p["lhs"], list(p["rhs"])) for p in description.get("productions", [])]


# ============================================================================
# Guard Rules (shape of the description, checked in order)
# ============================================================================

def check_top_level_keys(description: Any, **_) -> RuleViolation | None:
    """Description must be an object with the four grammar keys."""
    required = ("nonterminals", "start", "productions", "weights")
    if not isinstance(description, dict):
        return RuleViolation(
            code="NOT_AN_OBJECT",
            actual=type(description).__name__,
            expected="object",
            message="grammar description must be a JSON object",
        )
    missing = [key for key in required if key not in description]
    if missing:
        return RuleViolation(
            code="MISSING_KEYS",
            actual=missing,
            expected=list(required),
            message=f"grammar description lacks {', '.join(missing)}",
        )
    return None


def check_nonterminals(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Nonterminals: a nonempty list of unique valid names."""
    nonterminals = description["nonterminals"]
    if not isinstance(nonterminals, list) or not nonterminals:
        return [RuleViolation("NO_NONTERMINALS", nonterminals, "nonempty list", "nonterminals must be a nonempty list")]
    violations: list[RuleViolation] = []
    seen: set[str] = set()
    for name in nonterminals:
        err = validate_variable_name(name)
        if err:
            violations.append(RuleViolation("BAD_SYMBOL_NAME", name, "valid name", err))
        elif name in seen:
            violations.append(RuleViolation("DUPLICATE_NONTERMINAL", name, "unique", f"nonterminal {name!r} listed twice"))
        seen.add(name)
    return violations


def check_start_declared(description: dict[str, Any], **_) -> RuleViolation | None:
    start = description["start"]
    if start not in description["nonterminals"]:
        return RuleViolation(
            code="UNDECLARED_START",
            actual=start,
            expected="a declared nonterminal",
            message=f"start symbol {start!r} is not a nonterminal",
        )
    return None


def check_terminal_weights(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Terminal weights: positive integers, disjoint from nonterminals."""
    weights = description["weights"]
    if not isinstance(weights, dict):
        return [RuleViolation("BAD_WEIGHTS", weights, "object", "weights must map terminals to integers")]
    nonterminals = set(description["nonterminals"])
    violations: list[RuleViolation] = []
    for name, weight in weights.items():
        err = validate_variable_name(name)
        if err:
            violations.append(RuleViolation("BAD_SYMBOL_NAME", name, "valid name", err))
        if name in nonterminals:
            violations.append(RuleViolation("TERMINAL_IS_NONTERMINAL", name, "disjoint", f"{name!r} is both terminal and nonterminal"))
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            violations.append(RuleViolation("BAD_WEIGHT", name, "positive integer", f"weight of terminal {name!r} must be a positive integer"))
    return violations


def check_production_shape(description: dict[str, Any], **_) -> list[RuleViolation]:
    productions = description["productions"]
    if not isinstance(productions, list):
        return [RuleViolation("BAD_PRODUCTIONS", productions, "list", "productions must be a list")]
    violations: list[RuleViolation] = []
    for k, prod in enumerate(productions):
        if not isinstance(prod, dict) or "lhs" not in prod or not isinstance(prod.get("rhs"), list):
            violations.append(RuleViolation("BAD_PRODUCTION", k, "{lhs, rhs: [...]}", f"production {k} must have lhs and a rhs list"))
    return violations


def check_symbols_known(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Every lhs is a nonterminal; every rhs symbol is declared."""
    nonterminals = set(description["nonterminals"])
    known = nonterminals | set(description["weights"])
    violations: list[RuleViolation] = []
    for lhs, rhs in _productions(description):
        if lhs not in nonterminals:
            violations.append(RuleViolation("UNKNOWN_LHS", lhs, "a nonterminal", f"production head {lhs!r} is not a nonterminal"))
        for symbol in rhs:
            if symbol not in known:
                violations.append(RuleViolation("UNKNOWN_SYMBOL", symbol, "declared symbol", f"symbol {symbol!r} is not declared"))
    return violations


# ============================================================================
# Structure Rules (all checked, violations collected)
# ============================================================================

def check_productive(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Every nonterminal derives at least one terminal word."""
    nonterminals = set(description["nonterminals"])
    productions = _productions(description)
    productive: set[str] = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in productions:
            if lhs in productive:
                continue
            if all(s not in nonterminals or s in productive for s in rhs):
                productive.add(lhs)
                changed = True
    return [
        RuleViolation("UNPRODUCTIVE_NONTERMINAL", name, "productive", f"nonterminal {name!r} derives no terminal word")
        for name in description["nonterminals"]
        if name not in productive
    ]


def check_reachable(description: dict[str, Any], **_) -> list[RuleViolation]:
    """Every nonterminal is reachable from the start symbol."""
    nonterminals = set(description["nonterminals"])
    productions = _productions(description)
    reached = {description["start"]}
    frontier = [description["start"]]
    while frontier:
        current = frontier.pop()
        for lhs, rhs in productions:
            if lhs != current:
                continue
            for symbol in rhs:
                if symbol in nonterminals and symbol not in reached:
                    reached.add(symbol)
                    frontier.append(symbol)
    return [
        RuleViolation("UNREACHABLE_NONTERMINAL", name, "reachable", f"nonterminal {name!r} is unreachable from the start symbol")
        for name in description["nonterminals"]
        if name not in reached
    ]


# ============================================================================
# Rule Lists
# ============================================================================

GRAMMAR_GUARD_RULES = [
    Rule("TOP_LEVEL_KEYS", check_top_level_keys),
    Rule("NONTERMINALS", check_nonterminals),
    Rule("START_DECLARED", check_start_declared),
    Rule("TERMINAL_WEIGHTS", check_terminal_weights),
    Rule("PRODUCTION_SHAPE", check_production_shape),
    Rule("SYMBOLS_KNOWN", check_symbols_known),
]

GRAMMAR_STRUCTURE_RULES = [
    Rule("PRODUCTIVE", check_productive),
    Rule("REACHABLE", check_reachable),
]
