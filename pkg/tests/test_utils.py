import io
import logging
from fractions import Fraction

import pytest

from services.errors import GuardExceededError, ensure_within_guard
from utils import logging_setup
from utils.formatters import fmt_rational, fmt_series_table, fmt_word, parse_rational
from utils.rules import Rule, RuleViolation, check_rules_parallel, check_rules_sequential
from utils.validators import validate_degree_bound, validate_variable_name


def test_rationals():
    assert fmt_rational(Fraction(6, 4)) == "3/2"
    assert fmt_rational(-3) == "-3"
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational(7) == 7
    with pytest.raises(ValueError):
        parse_rational("")
    with pytest.raises(ValueError):
        parse_rational(True)


def test_words_and_tables():
    assert fmt_word([]) == "1"
    assert fmt_word(["a.1", "x"]) == "a.1 x"
    table = fmt_series_table([Fraction(1), Fraction(1, 2)], title="H")
    assert table.splitlines() == ["# H", "0  1", "1  1/2"]


def test_validators():
    assert validate_variable_name("t.1") is None
    assert validate_variable_name("") is not None
    assert validate_variable_name("a,b") is not None
    assert validate_variable_name("x" * 40) is not None
    assert validate_degree_bound(3) is None
    assert validate_degree_bound(-1) is not None
    assert validate_degree_bound(True) is not None


def _fail(code):
    def check(**_):
        return RuleViolation(code, None, None, code.lower())

    return Rule(code, check)


def test_rule_runners():
    rules = [Rule("OK", lambda **_: None), _fail("FIRST"), _fail("SECOND")]
    assert [v.code for v in check_rules_sequential(rules)] == ["FIRST"]
    assert [v.code for v in check_rules_parallel(rules)] == ["FIRST", "SECOND"]
    assert check_rules_parallel([Rule("LIST", lambda **_: [])]) == []


def test_guard():
    ensure_within_guard(5, 5, "degree")
    ensure_within_guard(6, 5, "degree", force=True)
    with pytest.raises(GuardExceededError, match="degree 6 exceeds the guard 5"):
        ensure_within_guard(6, 5, "degree")


def test_shutdown_tolerates_closed_stream(monkeypatch):
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    stream.close()
    monkeypatch.setattr(logging_setup, "_LISTENER", None)
    monkeypatch.setattr(logging_setup, "_QUEUE_HANDLER", None)
    monkeypatch.setattr(logging_setup, "_CONFIGURED", False)
    monkeypatch.setattr(logging_setup, "_DOWNSTREAM_HANDLERS", [handler])
    monkeypatch.setattr(logging_setup, "_SPECIAL_HANDLERS", [])
    logging_setup.shutdown_logging()
    assert logging_setup._DOWNSTREAM_HANDLERS == []
