"""Obstruction sets, factor queries and normal-word counting.

Factor queries go through a pyahocorasick automaton over an encoded copy of
each word. Counting needs the full transition function of the
multi-pattern automaton, which pyahocorasick does not expose, so
:class:`FactorAutomaton` builds its own goto/failure tables.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator

import ahocorasick

from services.errors import InvalidInputError
from services.freealg import Alphabet, Word, is_factor

logger = logging.getLogger(__name__)

# letter i is encoded as chr(_CODE_BASE + i); stays below the surrogate block
_CODE_BASE = 0x100
_CODE_LIMIT = 0xD800 - _CODE_BASE


def encode_word(w: Word) -> str:
    return "".join(chr(_CODE_BASE + i) for i in w)


def _check_encodable(w: Word) -> None:
    for letter in w:
        if not 0 <= letter < _CODE_LIMIT:
            raise InvalidInputError(f"letter index {letter} cannot be indexed")


class ObstructionSet:
    """Subword-free finite set of nonempty words with factor queries."""

    __slots__ = ("_words", "_automaton")

    def __init__(self, words: Iterable[Word], *, minimize: bool = False) -> None:
        unique = {tuple(w) for w in words}
        for w in unique:
            if not w:
                raise InvalidInputError("the empty word cannot be an obstruction")
            _check_encodable(w)
        ordered = sorted(unique, key=lambda w: (len(w), w))
        kept: list[Word] = []
        for w in ordered:
            inner = next((u for u in kept if is_factor(u, w)), None)
            if inner is None:
                kept.append(w)
            elif not minimize:
                raise InvalidInputError(f"obstruction {list(w)} contains obstruction {list(inner)}")
        self._words = frozenset(kept)
        self._automaton = self._build_automaton(kept)

    @staticmethod
    def _build_automaton(words: list[Word]) -> ahocorasick.Automaton | None:
        if not words:
            return None
        automaton = ahocorasick.Automaton()
        for w in words:
            automaton.add_word(encode_word(w), w)
        automaton.make_automaton()
        return automaton

    @property
    def words(self) -> frozenset[Word]:
        return self._words

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self._words, key=lambda w: (len(w), w)))

    def __contains__(self, w: object) -> bool:
        return w in self._words

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ObstructionSet):
            return NotImplemented
        return self._words == other._words

    def __hash__(self) -> int:
        return hash(self._words)

    def __repr__(self) -> str:
        return f"ObstructionSet({len(self._words)} words)"

    def contains_factor(self, w: Word) -> bool:
        """True iff some obstruction occurs in ``w`` as a contiguous factor."""
        if self._automaton is None:
            return False
        return next(self._automaton.iter(encode_word(w)), None) is not None

    def occurrences(self, w: Word) -> list[tuple[int, int, Word]]:
        """Every occurrence as (start, end_exclusive, obstruction), sorted."""
        if self._automaton is None:
            return []
        found = [
            (end + 1 - len(obs), end + 1, obs)
            for end, obs in self._automaton.iter(encode_word(w))
        ]
        found.sort()
        return found

    def min_end_from(self, w: Word) -> list[int | None]:
        """Entry p: smallest end of an occurrence starting at or after p."""
        best: list[int | None] = [None] * (len(w) + 1)
        for start, end, _ in self.occurrences(w):
            if best[start] is None or end < best[start]:
                best[start] = end
        for p in range(len(w) - 1, -1, -1):
            later = best[p + 1]
            if later is not None and (best[p] is None or later < best[p]):
                best[p] = later
        return best

    def restricted(self, alphabet: Alphabet, bound: int) -> ObstructionSet:
        return ObstructionSet(w for w in self._words if alphabet.degree(w) <= bound)


class FactorAutomaton:
    """Deterministic multi-pattern automaton with dead (matching) states."""

    def __init__(self, patterns: Iterable[Word], alphabet_size: int) -> None:
        self.alphabet_size = alphabet_size
        goto: list[dict[int, int]] = [{}]
        dead = [False]
        for pattern in patterns:
            node = 0
            for letter in pattern:
                nxt = goto[node].get(letter)
                if nxt is None:
                    nxt = len(goto)
                    goto[node][letter] = nxt
                    goto.append({})
                    dead.append(False)
                node = nxt
            dead[node] = True

        fail = [0] * len(goto)
        delta: list[list[int]] = [[0] * alphabet_size for _ in goto]
        for letter in range(alphabet_size):
            delta[0][letter] = goto[0].get(letter, 0)
        queue: deque[int] = deque(goto[0].values())
        while queue:
            node = queue.popleft()
            dead[node] = dead[node] or dead[fail[node]]
            for letter in range(alphabet_size):
                child = goto[node].get(letter)
                if child is None:
                    delta[node][letter] = delta[fail[node]][letter]
                else:
                    fail[child] = delta[fail[node]][letter]
                    delta[node][letter] = child
                    queue.append(child)
        self.delta = delta
        self.dead = dead

    @property
    def size(self) -> int:
        return len(self.delta)

    def accepts_avoiding(self, w: Word) -> bool:
        """True when ``w`` contains no pattern as a factor."""
        state = 0
        for letter in w:
            state = self.delta[state][letter]
            if self.dead[state]:
                return False
        return True


def normal_word_counts(obs: ObstructionSet, a: Alphabet, bound: int) -> list[int]:
    """Number of obstruction-free words of each weighted degree 0..bound."""
    if bound < 0:
        raise InvalidInputError("degree bound must be nonnegative")
    relevant = [w for w in obs.words if a.degree(w) <= bound]
    automaton = FactorAutomaton(relevant, len(a))
    weights = a.weights
    layers: list[dict[int, int]] = [dict() for _ in range(bound + 1)]
    layers[0][0] = 1
    for deg in range(bound + 1):
        for state, count in layers[deg].items():
            row = automaton.delta[state]
            for letter, weight in enumerate(weights):
                target_deg = deg + weight
                if target_deg > bound:
                    continue
                target = row[letter]
                if automaton.dead[target]:
                    continue
                layer = layers[target_deg]
                layer[target] = layer.get(target, 0) + count
    counts = [sum(layer.values()) for layer in layers]
    logger.debug("normal words: %d states, counts %s", automaton.size, counts)
    return counts
