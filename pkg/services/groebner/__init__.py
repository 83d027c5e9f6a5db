"""Truncated noncommutative Gröbner bases and obstruction sets."""

from services.groebner.buchberger import (
    OverlapWitness,
    SPair,
    TruncatedGB,
    buchberger_truncated,
    find_overlaps,
    make_spair,
    normal_form,
    s_polynomial,
    unresolved_pairs,
)
from services.groebner.obstructions import (
    FactorAutomaton,
    ObstructionSet,
    encode_word,
    normal_word_counts,
)

__all__ = [
    "FactorAutomaton",
    "ObstructionSet",
    "OverlapWitness",
    "SPair",
    "TruncatedGB",
    "buchberger_truncated",
    "encode_word",
    "find_overlaps",
    "make_spair",
    "normal_form",
    "normal_word_counts",
    "s_polynomial",
    "unresolved_pairs",
]
