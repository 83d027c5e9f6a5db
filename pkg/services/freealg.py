"""Words over weighted alphabets, deglex orderings and noncommutative polynomials.

Words are tuples of variable indices into an :class:`Alphabet`; the alphabet
order is the precedence order (earlier variable = greater). Coefficients are
exact ``Fraction`` values.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from services.errors import InvalidInputError, UndefinedLeadingMonomialError
from utils.validators import validate_variable_name

Word = tuple[int, ...]
EMPTY_WORD: Word = ()


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True, slots=True)
class Alphabet:
    """Ordered weighted variables; position 0 has the highest precedence."""

    names: tuple[str, ...]
    weights: tuple[int, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        weights = tuple(self.weights)
        if len(names) != len(weights):
            raise InvalidInputError("alphabet names and weights differ in length")
        for name in names:
            err = validate_variable_name(name)
            if err:
                raise InvalidInputError(err)
        for name, weight in zip(names, weights):
            if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
                raise InvalidInputError(f"weight of {name!r} must be a positive integer")
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise InvalidInputError("alphabet names must be unique")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> Alphabet:
        items = list(pairs)
        return cls(tuple(name for name, _ in items), tuple(weight for _, weight in items))

    @classmethod
    def uniform(cls, names: Iterable[str], weight: int = 1) -> Alphabet:
        names = tuple(names)
        return cls(names, (weight,) * len(names))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InvalidInputError(f"unknown variable {name!r}") from None

    def weight(self, letter: int) -> int:
        self.check_word((letter,))
        return self.weights[letter]

    def check_word(self, w: Word) -> None:
        size = len(self.names)
        for letter in w:
            if isinstance(letter, bool) or not isinstance(letter, int) or not 0 <= letter < size:
                raise InvalidInputError(f"letter index {letter!r} is not in the alphabet")

    def word(self, names: Iterable[str] | str) -> Word:
        """Parse names (an iterable or a space-separated string) into a word."""
        if isinstance(names, str):
            names = names.split()
        return tuple(self.index(name) for name in names)

    def names_of(self, w: Word) -> list[str]:
        self.check_word(w)
        return [self.names[i] for i in w]

    def degree(self, w: Word) -> int:
        return degree(w, self)


def degree(w: Word, a: Alphabet) -> int:
    """Weighted degree; the empty word has degree 0."""
    a.check_word(w)
    weights = a.weights
    return sum(weights[i] for i in w)


@dataclass(frozen=True, slots=True)
class OrderSpec:
    """Degree-then-lexicographic ordering by alphabet precedence."""

    alphabet: Alphabet
    scheme: str = "deglex"

    def __post_init__(self) -> None:
        if self.scheme != "deglex":
            raise InvalidInputError(f"unsupported ordering scheme {self.scheme!r}")

    def key(self, w: Word) -> tuple[int, tuple[int, ...]]:
        """Sort key: a larger key is a greater word. Hot path, no letter checks."""
        weights = self.alphabet.weights
        top = len(weights) - 1
        # equal weighted degree rules out proper prefixes, so plain tuple order is lex
        return sum(weights[i] for i in w), tuple(top - i for i in w)

    def compare(self, u: Word, v: Word) -> Cmp:
        return compare_deglex(u, v, self)

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)


def compare_deglex(u: Word, v: Word, o: OrderSpec) -> Cmp:
    a = o.alphabet
    du, dv = degree(u, a), degree(v, a)
    if du != dv:
        return Cmp.LT if du < dv else Cmp.GT
    for x, y in zip(u, v):
        if x != y:
            # smaller index = higher precedence
            return Cmp.GT if x < y else Cmp.LT
    if len(u) != len(v):
        return Cmp.LT if len(u) < len(v) else Cmp.GT
    return Cmp.EQ


def _as_fraction(value: Fraction | int) -> Fraction:
    if isinstance(value, bool):
        raise InvalidInputError("boolean is not a coefficient")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InvalidInputError(f"coefficient {value!r} is not an exact rational")


class NcPoly:
    """Finite map from words to nonzero rationals; immutable once built."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Fraction | int] | Iterable[tuple[Word, Fraction | int]] | None = None):
        store: dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                key = tuple(w)
                total = store.get(key, Fraction(0)) + _as_fraction(c)
                if total:
                    store[key] = total
                else:
                    store.pop(key, None)
        self._terms = store

    @classmethod
    def _wrap(cls, store: dict[Word, Fraction]) -> NcPoly:
        """Adopt a dict that already has no zero coefficients."""
        poly = cls.__new__(cls)
        poly._terms = store
        return poly

    @classmethod
    def zero(cls) -> NcPoly:
        return cls._wrap({})

    @classmethod
    def monomial(cls, w: Word, coeff: Fraction | int = 1) -> NcPoly:
        return cls({tuple(w): coeff})

    @classmethod
    def constant(cls, coeff: Fraction | int) -> NcPoly:
        return cls({EMPTY_WORD: coeff})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def support(self) -> list[Word]:
        return list(self._terms)

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == NcPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "NcPoly(0)"
        parts = [f"{c}*{list(w)}" for w, c in self._terms.items()]
        return f"NcPoly({' + '.join(parts)})"

    def __neg__(self) -> NcPoly:
        return NcPoly._wrap({w: -c for w, c in self._terms.items()})

    def __add__(self, other: NcPoly) -> NcPoly:
        if not isinstance(other, NcPoly):
            return NotImplemented
        store = dict(self._terms)
        for w, c in other._terms.items():
            total = store.get(w, 0) + c
            if total:
                store[w] = total
            else:
                store.pop(w, None)
        return NcPoly._wrap(store)

    def __sub__(self, other: NcPoly) -> NcPoly:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Fraction | int) -> NcPoly:
        factor = _as_fraction(factor)
        if not factor:
            return NcPoly.zero()
        return NcPoly._wrap({w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other: NcPoly | Fraction | int) -> NcPoly:
        if isinstance(other, NcPoly):
            store: dict[Word, Fraction] = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    total = store.get(w, 0) + a * b
                    if total:
                        store[w] = total
                    else:
                        store.pop(w, None)
            return NcPoly._wrap(store)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Fraction | int) -> NcPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def lr_mul(self, left: Word, right: Word) -> NcPoly:
        """left * self * right for words left, right."""
        left, right = tuple(left), tuple(right)
        return NcPoly._wrap({left + w + right: c for w, c in self._terms.items()})

    def leading_monomial(self, o: OrderSpec) -> Word:
        return leading_monomial(self, o)

    def leading_coefficient(self, o: OrderSpec) -> Fraction:
        return self._terms[leading_monomial(self, o)]

    def monic(self, o: OrderSpec) -> NcPoly:
        return self.scale(1 / self.leading_coefficient(o))

    def sorted_terms(self, o: OrderSpec) -> list[tuple[Word, Fraction]]:
        """Terms in descending order."""
        return sorted(self._terms.items(), key=lambda item: o.key(item[0]), reverse=True)

    def degree(self, a: Alphabet) -> int:
        if not self._terms:
            raise UndefinedLeadingMonomialError("degree of the zero polynomial is undefined")
        return max(degree(w, a) for w in self._terms)

    def is_homogeneous(self, a: Alphabet) -> bool:
        return len({degree(w, a) for w in self._terms}) <= 1

    def check_letters(self, a: Alphabet) -> None:
        for w in self._terms:
            a.check_word(w)


def leading_monomial(f: NcPoly, o: OrderSpec) -> Word:
    """The maximal word of the support."""
    if f.is_zero():
        raise UndefinedLeadingMonomialError("zero polynomial has no leading monomial")
    f.check_letters(o.alphabet)
    return o.max_word(f.support())


def is_factor(small: Word, big: Word) -> bool:
    """True when ``small`` occurs in ``big`` as a contiguous factor."""
    k = len(small)
    if k == 0:
        return True
    first = small[0]
    for i in range(len(big) - k + 1):
        if big[i] == first and big[i:i + k] == small:
            return True
    return False

