"""Dyck languages, P_n = (D_n e)*, homomorphic images and grammars.

Bracket alphabets name openers ``a.i`` and closers ``b.i``; the letter
``e`` (when present) follows them. Enumeration uses unit weights.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from services.errors import GrammarLoadError, InvalidInputError
from services.freealg import Alphabet, Word
from services.rules.grammar_rules import GRAMMAR_GUARD_RULES, GRAMMAR_STRUCTURE_RULES
from services.rules.homomorphism_rules import (
    HOMOMORPHISM_GUARD_RULES,
    HOMOMORPHISM_IMAGE_RULES,
    bracket_names,
)
from utils.rules import check_rules_parallel, check_rules_sequential

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def bracket_alphabet(n: int, with_e: bool = False) -> Alphabet:
    """a.1..a.n, b.1..b.n (then e), all of weight 1."""
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    names = bracket_names(n) + (["e"] if with_e else [])
    return Alphabet.uniform(names)


def opener(i: int) -> int:
    return i - 1


def closer(n: int, i: int) -> int:
    return n + i - 1


@dataclass(frozen=True)
class LanguageSlice:
    """Words of a language grouped by weighted degree, up to ``bound``."""

    alphabet: Alphabet
    bound: int
    by_degree: Mapping[int, frozenset[Word]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for deg, words in self.by_degree.items():
            if deg > self.bound:
                raise InvalidInputError(f"degree {deg} exceeds the slice bound {self.bound}")
            for w in words:
                if self.alphabet.degree(w) != deg:
                    raise InvalidInputError(f"word {list(w)} is not of degree {deg}")
            if words:
                cleaned[deg] = frozenset(words)
        object.__setattr__(self, "by_degree", cleaned)

    @classmethod
    def from_words(cls, alphabet: Alphabet, bound: int, words: Iterable[Word]) -> LanguageSlice:
        """Group words by degree; words above ``bound`` are dropped."""
        grouped: dict[int, set[Word]] = {}
        for w in words:
            w = tuple(w)
            deg = alphabet.degree(w)
            if deg <= bound:
                grouped.setdefault(deg, set()).add(w)
        return cls(alphabet, bound, {deg: frozenset(ws) for deg, ws in grouped.items()})

    def at(self, deg: int) -> frozenset[Word]:
        return self.by_degree.get(deg, frozenset())

    def sizes(self) -> list[int]:
        """Word counts for degrees 0..bound."""
        return [len(self.at(deg)) for deg in range(self.bound + 1)]

    def words(self) -> list[Word]:
        """All words sorted by (degree, word)."""
        return [w for deg in sorted(self.by_degree) for w in sorted(self.by_degree[deg])]

    def word_set(self) -> frozenset[Word]:
        return frozenset().union(*self.by_degree.values()) if self.by_degree else frozenset()

    def restricted(self, bound: int) -> LanguageSlice:
        return LanguageSlice(self.alphabet, bound, {d: ws for d, ws in self.by_degree.items() if d <= bound})

    def __contains__(self, w: object) -> bool:
        if not isinstance(w, tuple):
            return False
        return any(w in words for words in self.by_degree.values())

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words())

    def __len__(self) -> int:
        return sum(len(ws) for ws in self.by_degree.values())


# ---------------------------------------------------------------------------
# Dyck and P_n
# ---------------------------------------------------------------------------

def _dyck_by_length(n: int, max_len: int) -> list[list[Word]]:
    """D[k] = balanced words of length k; D[k] = U a_i D[j] b_i D[k-2-j]."""
    table: list[list[Word]] = [[] for _ in range(max_len + 1)]
    table[0].append(())
    for length in range(2, max_len + 1, 2):
        bucket = table[length]
        for inner in range(0, length - 1, 2):
            rest = length - 2 - inner
            for i in range(1, n + 1):
                a, b = (opener(i),), (closer(n, i),)
                for u in table[inner]:
                    head = a + u + b
                    for v in table[rest]:
                        bucket.append(head + v)
    return table


def enumerate_dyck(n: int, bound: int) -> LanguageSlice:
    """D_n up to length ``bound`` over :func:`bracket_alphabet`."""
    if bound < 0:
        raise InvalidInputError("degree bound must be nonnegative")
    table = _dyck_by_length(n, bound)
    alphabet = bracket_alphabet(n)
    return LanguageSlice(alphabet, bound, {k: frozenset(ws) for k, ws in enumerate(table) if ws})


def enumerate_pn(n: int, bound: int) -> LanguageSlice:
    """(D_n e)* up to length ``bound``, split by the last block."""
    if bound < 0:
        raise InvalidInputError("degree bound must be nonnegative")
    alphabet = bracket_alphabet(n, with_e=True)
    e = (alphabet.index("e"),)
    dyck = _dyck_by_length(n, bound)
    table: list[list[Word]] = [[] for _ in range(bound + 1)]
    table[0].append(())
    for k in range(1, bound + 1):
        for j in range(0, k):
            for prefix in table[k - j - 1]:
                for block in dyck[j]:
                    table[k].append(prefix + block + e)
    return LanguageSlice(alphabet, bound, {k: frozenset(ws) for k, ws in enumerate(table) if ws})


def is_dyck_word(w: Word, n: int) -> bool:
    """Stack check over the index convention of :func:`bracket_alphabet`."""
    stack: list[int] = []
    for letter in w:
        if 0 <= letter < n:
            stack.append(letter)
        elif n <= letter < 2 * n:
            if not stack or stack.pop() != letter - n:
                return False
        else:
            return False
    return not stack


def is_pn_word(w: Word, n: int) -> bool:
    """Empty, or Dyck blocks each closed by e (index 2n)."""
    if not w:
        return True
    e = 2 * n
    if w[-1] != e:
        return False
    start = 0
    for pos, letter in enumerate(w):
        if letter == e:
            if not is_dyck_word(w[start:pos], n):
                return False
            start = pos + 1
    return True


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    """Letter map a.i, b.i -> nonempty words over unit-weight terminals."""

    n: int
    target: Alphabet
    images: Mapping[str, Word]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError("n must be at least 1")
        if any(w != 1 for w in self.target.weights):
            raise InvalidInputError("terminals must have unit weight")
        expected = set(bracket_names(self.n))
        if set(self.images) != expected:
            raise InvalidInputError("images must cover exactly a.1..a.n, b.1..b.n")
        for name, image in self.images.items():
            if not image:
                raise InvalidInputError(f"image of {name!r} is empty")
            self.target.check_word(image)
        object.__setattr__(self, "images", {k: tuple(v) for k, v in self.images.items()})

    @property
    def m(self) -> int:
        return len(self.target)

    @property
    def d(self) -> int:
        """Largest image degree."""
        return max(len(w) for w in self.images.values())

    @property
    def min_image_degree(self) -> int:
        return min(len(w) for w in self.images.values())

    @property
    def source(self) -> Alphabet:
        return bracket_alphabet(self.n)

    def image_of(self, name: str) -> Word:
        try:
            return self.images[name]
        except KeyError:
            raise InvalidInputError(f"no image for {name!r}") from None

    def apply(self, w: Word) -> Word:
        """phi(w) for a word over the bracket alphabet."""
        names = self.source.names_of(w)
        out: list[int] = []
        for name in names:
            out.extend(self.images[name])
        return tuple(out)

    def to_description(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "terminals": list(self.target.names),
            "images": {k: self.target.names_of(v) for k, v in sorted(self.images.items())},
        }


def parse_homomorphism(description: Any) -> Homomorphism:
    """Build a homomorphism from its JSON description, collecting every violation."""
    violations = check_rules_sequential(HOMOMORPHISM_GUARD_RULES, description=description)
    if not violations:
        violations = check_rules_parallel(HOMOMORPHISM_IMAGE_RULES, description=description)
    if violations:
        raise InvalidInputError("; ".join(v.message for v in violations))
    target = Alphabet.uniform(description["terminals"])
    images = {name: target.word(image) for name, image in description["images"].items()}
    return Homomorphism(description["n"], target, images)


def image_language(h: Homomorphism, bound: int) -> LanguageSlice:
    """phi(D_n) up to image degree ``bound``, deduplicated."""
    if bound < 0:
        raise InvalidInputError("degree bound must be nonnegative")
    # a Dyck word whose image fits in degree N has at most N / min_image_degree letters
    preimage_bound = bound // h.min_image_degree
    dyck = _dyck_by_length(h.n, preimage_bound)
    images: set[Word] = set()
    preimages = 0
    for words in dyck:
        for w in words:
            preimages += 1
            img = h.apply(w)
            if h.target.degree(img) <= bound:
                images.add(img)
    logger.debug("image_language: %d preimages, %d distinct images", preimages, len(images))
    return LanguageSlice.from_words(h.target, bound, images)


# ---------------------------------------------------------------------------
# Grammars
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Grammar:
    nonterminals: tuple[str, ...]
    start: str
    productions: tuple[tuple[str, tuple[str, ...]], ...]
    terminals: Alphabet


def parse_grammar(description: Any) -> Grammar:
    """Validate a grammar description; raises GrammarLoadError with all violations."""
    violations = check_rules_sequential(GRAMMAR_GUARD_RULES, description=description)
    if not violations:
        violations = check_rules_parallel(GRAMMAR_STRUCTURE_RULES, description=description)
    if violations:
        raise GrammarLoadError("; ".join(v.message for v in violations), violations)
    weights = description["weights"]
    terminals = Alphabet(tuple(weights), tuple(weights.values()))
    productions = tuple((p["lhs"], tuple(p["rhs"])) for p in description["productions"])
    grammar = Grammar(tuple(description["nonterminals"]), description["start"], productions, terminals)
    logger.debug(
        "grammar loaded: %d nonterminals, %d productions, %d terminals",
        len(grammar.nonterminals), len(productions), len(terminals),
    )
    return grammar


def membership(g: Grammar, w: Word) -> bool:
    """Chart parse: does the start symbol derive ``w``?"""
    g.terminals.check_word(w)
    names = g.terminals.names
    size = len(w)
    # chart[i][j]: nonterminals deriving w[i:j]
    chart: list[list[set[str]]] = [[set() for _ in range(size + 1)] for _ in range(size + 1)]

    def ends_from(i: int, j: int, rhs: tuple[str, ...]) -> bool:
        positions = {i}
        for symbol in rhs:
            nxt: set[int] = set()
            for p in positions:
                if symbol in g.terminals:
                    if p < j and names[w[p]] == symbol:
                        nxt.add(p + 1)
                else:
                    for q in range(p, j + 1):
                        if symbol in chart[p][q]:
                            nxt.add(q)
            positions = nxt
            if not positions:
                return False
        return j in positions

    for length in range(size + 1):
        for i in range(size - length + 1):
            j = i + length
            cell = chart[i][j]
            changed = True
            while changed:
                changed = False
                for lhs, rhs in g.productions:
                    if lhs not in cell and ends_from(i, j, rhs):
                        cell.add(lhs)
                        changed = True
    return g.start in chart[0][size]


def grammar_language(g: Grammar, bound: int) -> LanguageSlice:
    """Brute-force slice of L(g): every terminal word up to ``bound`` run through :func:`membership`."""
    accepted: list[Word] = []
    frontier: list[Word] = [()]
    weights = g.terminals.weights
    while frontier:
        w = frontier.pop()
        if membership(g, w):
            accepted.append(w)
        deg = sum(weights[i] for i in w)
        for letter, weight in enumerate(weights):
            if deg + weight <= bound:
                frontier.append(w + (letter,))
    return LanguageSlice.from_words(g.terminals, bound, accepted)
