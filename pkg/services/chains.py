"""Chain languages of a monomial algebra.

``L_t`` (t >= 1) follows the set formulas

    L_{2k}   = (X+ L^k ∩ L^k X+) minus (X+ L^k X+ ∪ L^{k+1})
    L_{2k-1} = (X+ L^{k-1} X+ ∩ L^k) minus (X+ L^k ∪ L^k X+)

with L = X* L_1 X*, L^0 = {ε}, and L_0 = X. L_1 is the obstruction set
itself (the odd formula at k = 1 misses obstructions of length one).
:func:`govorov_chain_language` evaluates them on every word (small instances
only); :func:`chain_language` only tests words covered by overlapping obstruction occurrences.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from config import settings
from services.errors import InvalidInputError, ensure_within_guard
from services.freealg import Alphabet, Word
from services.groebner.obstructions import ObstructionSet
from services.langkit import LanguageSlice

logger = logging.getLogger(__name__)


def factor_membership(w: Word, obs: ObstructionSet) -> bool:
    """w in X* L_1 X*."""
    return obs.contains_factor(w)


def power_membership(w: Word, obs: ObstructionSet, t: int) -> bool:
    """w in L^t: a split into t consecutive factors, each containing an obstruction."""
    if t < 0:
        raise InvalidInputError("power must be nonnegative")
    if t == 0:
        return not w
    min_end = obs.min_end_from(w)
    # reachable[k]: cut positions after k factors
    reachable = {0}
    for _ in range(t):
        nxt: set[int] = set()
        for p in reachable:
            end = min_end[p]
            if end is not None:
                nxt.update(range(end, len(w) + 1))
        reachable = nxt
        if not reachable:
            return False
    return len(w) in reachable


def _in_left_ext(w: Word, obs: ObstructionSet, k: int) -> bool:
    """w in X+ L^k."""
    return any(power_membership(w[i:], obs, k) for i in range(1, len(w) + 1))


def _in_right_ext(w: Word, obs: ObstructionSet, k: int) -> bool:
    """w in L^k X+."""
    return any(power_membership(w[:j], obs, k) for j in range(len(w)))


def _in_both_ext(w: Word, obs: ObstructionSet, k: int) -> bool:
    """w in X+ L^k X+."""
    size = len(w)
    return any(
        power_membership(w[i:j], obs, k)
        for i in range(1, size)
        for j in range(i, size)
    )


def is_chain(w: Word, obs: ObstructionSet, t: int) -> bool:
    """Exact chain predicate for t >= 1."""
    if t < 1:
        raise InvalidInputError("chain index must be at least 1")
    if t == 1:
        return tuple(w) in obs
    if t % 2 == 0:
        k = t // 2
        return (
            _in_left_ext(w, obs, k)
            and _in_right_ext(w, obs, k)
            and not _in_both_ext(w, obs, k)
            and not power_membership(w, obs, k + 1)
        )
    k = (t + 1) // 2
    return (
        _in_both_ext(w, obs, k - 1)
        and power_membership(w, obs, k)
        and not _in_left_ext(w, obs, k)
        and not _in_right_ext(w, obs, k)
    )


def _letters_slice(a: Alphabet, bound: int) -> LanguageSlice:
    return LanguageSlice.from_words(a, bound, ((i,) for i in range(len(a))))


def govorov_chain_language(
    obs: ObstructionSet,
    a: Alphabet,
    t: int,
    bound: int,
    *,
    force: bool = False,
) -> LanguageSlice:
    """Brute force: every word of degree <= bound filtered by :func:`is_chain`."""
    force = force or settings.guards_disabled
    ensure_within_guard(len(a), settings.oracle_max_letters, "oracle alphabet size", force=force)
    ensure_within_guard(bound, settings.oracle_max_degree, "oracle degree", force=force)
    if t == 0:
        return _letters_slice(a, bound)
    weights = a.weights
    found: list[Word] = []
    frontier: list[tuple[Word, int]] = [((), 0)]
    while frontier:
        w, deg = frontier.pop()
        if w and is_chain(w, obs, t):
            found.append(w)
        for letter, weight in enumerate(weights):
            if deg + weight <= bound:
                frontier.append((w + (letter,), deg + weight))
    logger.debug("oracle L_%d up to degree %d: %d words", t, bound, len(found))
    return LanguageSlice.from_words(a, bound, found)


class _PrefixIndex:
    """Obstructions keyed by each of their proper nonempty prefixes."""

    def __init__(self, words: list[Word]) -> None:
        self.extending: dict[Word, list[Word]] = {}
        for v in words:
            for k in range(1, len(v)):
                self.extending.setdefault(v[:k], []).append(v)

    def continuations(self, tail: Word) -> list[Word]:
        return self.extending.get(tail, [])


def _overlap_chains(obs: ObstructionSet, a: Alphabet, t: int, bound: int) -> set[Word]:
    """Words covered by t occurrences, each starting strictly inside the previous one."""
    weights = a.weights
    words = [w for w in obs if a.degree(w) <= bound]
    index = _PrefixIndex(words)
    # state: (word, start of the last occurrence, degree)
    layer = [(w, 0, a.degree(w)) for w in words]
    for _ in range(t - 1):
        nxt: list[tuple[Word, int, int]] = []
        for w, last_start, deg in layer:
            size = len(w)
            for start in range(last_start + 1, size):
                for v in index.continuations(w[start:]):
                    extra = v[size - start:]
                    new_deg = deg + sum(weights[i] for i in extra)
                    if new_deg <= bound:
                        nxt.append((w + extra, start, new_deg))
        layer = nxt
        if not layer:
            break
    return {w for w, _, _ in layer}


def chain_language(obs: ObstructionSet, a: Alphabet, t: int, bound: int) -> LanguageSlice:
    """Production enumerator: overlap-chained candidates verified by :func:`is_chain`."""
    if t < 0:
        raise InvalidInputError("chain index must be nonnegative")
    if t == 0:
        return _letters_slice(a, bound)
    candidates = _overlap_chains(obs, a, t, bound)
    verified = [w for w in candidates if is_chain(w, obs, t)]
    logger.debug("L_%d up to degree %d: %d candidates, %d chains", t, bound, len(candidates), len(verified))
    return LanguageSlice.from_words(a, bound, verified)


@dataclass(frozen=True)
class ChainTable:
    """Chain slices L_0..L_max_t; Tor_{t+1} dimensions are their sizes."""

    alphabet: Alphabet
    bound: int
    slices: tuple[LanguageSlice, ...]

    @property
    def max_t(self) -> int:
        return len(self.slices) - 1

    def dims(self) -> list[list[int]]:
        """Row t: dim Tor_{t+1} per degree 0..bound."""
        return [s.sizes() for s in self.slices]

    def chain(self, t: int) -> LanguageSlice:
        return self.slices[t]

    def overlapping_words(self) -> list[tuple[Word, int, int]]:
        """(word, t1, t2) for words found in two different slices."""
        clashes = []
        for (t1, s1), (t2, s2) in itertools.combinations(enumerate(self.slices), 2):
            for w in s1.word_set() & s2.word_set():
                clashes.append((w, t1, t2))
        return clashes


def tor_table(
    obs: ObstructionSet,
    a: Alphabet,
    max_t: int,
    bound: int,
    *,
    oracle: bool = False,
    force: bool = False,
) -> ChainTable:
    """Chain slices for t = 0..max_t (oracle or production enumerator)."""
    force = force or settings.guards_disabled
    if max_t < 0:
        raise InvalidInputError("max_t must be nonnegative")
    ensure_within_guard(max_t, settings.chain_max_t, "chain index", force=force)
    restricted = obs.restricted(a, bound)
    slices = []
    for t in range(max_t + 1):
        if oracle:
            slices.append(govorov_chain_language(restricted, a, t, bound, force=force))
        else:
            slices.append(chain_language(restricted, a, t, bound))
        logger.info("L_%d up to degree %d: %d words", t, bound, len(slices[-1]))
    return ChainTable(a, bound, tuple(slices))


def compare_dims(table: ChainTable, predicted: list[list[int]]) -> tuple[int, int] | None:
    """First (t, degree) where computed and predicted dimensions differ, or None."""
    computed = table.dims()
    for t in range(max(len(computed), len(predicted))):
        row_c = computed[t] if t < len(computed) else []
        row_p = predicted[t] if t < len(predicted) else []
        for deg in range(table.bound + 1):
            c = row_c[deg] if deg < len(row_c) else 0
            p = row_p[deg] if deg < len(row_p) else 0
            if c != p:
                return t, deg
    return None


def full_tor_table(obs: ObstructionSet, a: Alphabet, bound: int) -> ChainTable:
    """Chain slices until the first empty L_t (t >= 1); later ones are empty too."""
    restricted = obs.restricted(a, bound)
    slices = [chain_language(restricted, a, 0, bound)]
    t = 1
    while True:
        current = chain_language(restricted, a, t, bound)
        if not len(current):
            break
        slices.append(current)
        logger.info("L_%d up to degree %d: %d words", t, bound, len(current))
        t += 1
    return ChainTable(a, bound, tuple(slices))
