"""Rational, word and series formatting helpers."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

EMPTY_WORD_TEXT = "1"


def fmt_rational(value: Fraction | int) -> str:
    """Canonical "p/q" string; integral values print as "p"."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str | int) -> Fraction:
    """Inverse of :func:`fmt_rational`; raises ValueError on junk."""
    if isinstance(text, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(text, int):
        return Fraction(text)
    raw = str(text).strip()
    if not raw:
        raise ValueError("empty rational")
    return Fraction(raw)


def fmt_word(names: Iterable[str]) -> str:
    """Space-separated variable names, "1" for the empty word."""
    text = " ".join(names)
    return text or EMPTY_WORD_TEXT


def fmt_series_table(coefficients: Sequence[Fraction], title: str = "") -> str:
    """Plain-text degree -> coefficient table."""
    rows = [f"# {title}"] if title else []
    width = len(str(len(coefficients) - 1)) if coefficients else 1
    for degree, value in enumerate(coefficients):
        rows.append(f"{degree:>{width}}  {fmt_rational(value)}")
    return "\n".join(rows)
