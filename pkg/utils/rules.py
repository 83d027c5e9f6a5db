"""Rule system for structured validation.

Loaders describe their checks as declarative rule lists instead of
scattered if-chains; every check receives the same keyword context.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class RuleViolation:
    """Uniform result of a failed rule.

    Attributes:
        code: machine-readable code, e.g. "UNPRODUCTIVE_NONTERMINAL"
        actual: offending value, e.g. the symbol name
        expected: what the rule wanted
        message: human-readable sentence
    """
    code: str
    actual: Any
    expected: Any
    message: str


@dataclass
class Rule:
    """A single validation rule.

    Attributes:
        code: unique rule identifier
        check: callable returning a RuleViolation, a list of them, or None
    """
    code: str
    check: Callable[..., RuleViolation | list[RuleViolation] | None]


def _as_list(result: RuleViolation | list[RuleViolation] | None) -> list[RuleViolation]:
    if result is None:
        return []
    if isinstance(result, RuleViolation):
        return [result]
    return list(result)


def check_rules_sequential(rules: list[Rule], **ctx) -> list[RuleViolation]:
    """Run rules in order and stop at the first rule that fails.

    Suited to dependent chains: there is no point checking productivity
    before every right-hand-side symbol is known.
    """
    for rule in rules:
        violations = _as_list(rule.check(**ctx))
        if violations:
            return violations
    return []


def check_rules_parallel(rules: list[Rule], **ctx) -> list[RuleViolation]:
    """Run every rule and collect all failures."""
    violations: list[RuleViolation] = []
    for rule in rules:
        violations.extend(_as_list(rule.check(**ctx)))
    return violations
