"""The presentation A(n, phi) built from a homomorphic image of D_n.

Generators, by decreasing precedence:
a.i.j > b.i.j > a.i > b.i > e > x > y > t.k, ascending indices first inside
each family. Every generator except the terminals t.k weighs d, the
largest image degree; terminals weigh 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from services.errors import InvalidInputError
from services.freealg import Alphabet, NcPoly, OrderSpec, Word, degree, leading_monomial
from services.langkit import Homomorphism, LanguageSlice, enumerate_pn, image_language
from services.series import (
    RatSeries,
    pn_series,
    series_shift_up,
    series_substitute_power,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    h: Homomorphism

    def __post_init__(self) -> None:
        if self.n != self.h.n:
            raise InvalidInputError(f"n = {self.n} but the homomorphism has {self.h.n} bracket kinds")

    @property
    def m(self) -> int:
        return self.h.m

    @property
    def d(self) -> int:
        return self.h.d


@dataclass(frozen=True)
class PresentationSpec:
    alphabet: Alphabet
    ordering: OrderSpec
    relations: tuple[NcPoly, ...]
    params: ConstructionParams | None = None
    preset: str | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def sorted_relations(self) -> list[NcPoly]:
        """By (degree, order) of the leading monomial."""
        return sorted(self.relations, key=lambda f: self.ordering.key(leading_monomial(f, self.ordering)))


def terminal_name(k: int) -> str:
    """Construction name of target letter k (0-based)."""
    return f"t.{k + 1}"


def construction_alphabet(p: ConstructionParams) -> Alphabet:
    n, d = p.n, p.d
    rng = range(1, n + 1)
    pairs: list[tuple[str, int]] = []
    pairs += [(f"a.{i}.{j}", d) for i in rng for j in rng]
    pairs += [(f"b.{i}.{j}", d) for i in rng for j in rng]
    pairs += [(f"a.{i}", d) for i in rng]
    pairs += [(f"b.{i}", d) for i in rng]
    pairs += [("e", d), ("x", d), ("y", d)]
    pairs += [(terminal_name(k), 1) for k in range(p.m)]
    return Alphabet.from_pairs(pairs)


class _Builder:
    def __init__(self, alphabet: Alphabet, p: ConstructionParams) -> None:
        self.a = alphabet
        self.p = p

    def w(self, *names: str) -> Word:
        return tuple(self.a.index(name) for name in names)

    def phi(self, name: str) -> Word:
        return tuple(self.a.index(terminal_name(k)) for k in self.p.h.image_of(name))

    def binomial(self, left: Word, right: Word) -> NcPoly:
        return NcPoly({left: 1}) - NcPoly({right: 1})


def _relations_by_family(p: ConstructionParams, alphabet: Alphabet) -> dict[str, list[NcPoly]]:
    b = _Builder(alphabet, p)
    n = p.n
    rng = range(1, n + 1)
    fam_i = [b.binomial(b.w(f"a.{i}.{i}", "x"), b.w("x", f"a.{i}.{i}")) for i in rng]
    fam_i.append(b.binomial(b.w("b.1.1", "x"), b.w("x", "e")))

    fam_ii: list[NcPoly] = []
    for i in rng:
        for j in rng:
            for l in rng:
                for head in ("a", "b"):
                    for tail in ("a", "b"):
                        fam_ii.append(b.binomial(
                            b.w(f"{head}.{i}.{j}", f"{tail}.{l}"),
                            b.w(f"{head}.{i}", f"{tail}.{l}.{j}"),
                        ))
    for i in rng:
        for j in rng:
            fam_ii.append(b.binomial(b.w(f"a.{i}.{j}", "e"), b.w(f"a.{i}", f"b.{j}")))
            fam_ii.append(b.binomial(b.w(f"b.{i}.{j}", "e"), b.w(f"b.{i}", f"b.{j}")))

    fam_iii: list[NcPoly] = []
    for i in rng:
        for letter in ("a", "b"):
            name = f"{letter}.{i}"
            fam_iii.append(b.binomial(b.w(name, "y"), b.w("y") + b.phi(name)))
    for i in rng:
        for j in rng:
            fam_iii.append(NcPoly.monomial(b.w(f"a.{i}.{j}", "y")))
            fam_iii.append(NcPoly.monomial(b.w(f"b.{i}.{j}", "y")))

    fam_iv = [NcPoly.monomial(b.w("x", "y", "e"))]
    return {"i": fam_i, "ii": fam_ii, "iii": fam_iii, "iv": fam_iv}


def build_presentation(p: ConstructionParams, preset: str | None = None) -> PresentationSpec:
    alphabet = construction_alphabet(p)
    ordering = OrderSpec(alphabet)
    families = _relations_by_family(p, alphabet)
    relations = tuple(f for family in ("i", "ii", "iii", "iv") for f in families[family])
    logger.debug("presentation n=%d m=%d d=%d: %d generators, %d relations", p.n, p.m, p.d, len(alphabet), len(relations))
    return PresentationSpec(alphabet, ordering, relations, params=p, preset=preset)


def is_homogeneous(spec: PresentationSpec) -> bool:
    return all(f.is_homogeneous(spec.alphabet) for f in spec.relations)


def _relabel_pn_word(w: Word, n: int, alphabet: Alphabet) -> Word:
    """Bracket-alphabet indices (a.i, b.i, e) to construction indices."""
    names = [f"a.{i}" for i in range(1, n + 1)] + [f"b.{i}" for i in range(1, n + 1)] + ["e"]
    return tuple(alphabet.index(names[letter]) for letter in w)


def predicted_gb_monomials(p: ConstructionParams, bound: int) -> LanguageSlice:
    """x p y v e for p in P_n, v in L, of degree <= bound."""
    alphabet = construction_alphabet(p)
    d = p.d
    if bound < 3 * d:
        return LanguageSlice(alphabet, bound)
    x, y, e = alphabet.index("x"), alphabet.index("y"), alphabet.index("e")
    pn = enumerate_pn(p.n, (bound - 3 * d) // d)
    lang = image_language(p.h, bound - 3 * d)
    terminals = [alphabet.index(terminal_name(k)) for k in range(p.m)]
    words: list[Word] = []
    for pw in pn:
        middle = _relabel_pn_word(pw, p.n, alphabet)
        budget = bound - 3 * d - d * len(pw)
        for v in lang:
            if len(v) <= budget:
                words.append((x,) + middle + (y,) + tuple(terminals[k] for k in v) + (e,))
    return LanguageSlice.from_words(alphabet, bound, words)


def relation_leads(spec: PresentationSpec, families: tuple[str, ...] = ("i", "ii", "iii")) -> list[Word]:
    if spec.params is None:
        raise InvalidInputError("presentation carries no construction parameters")
    by_family = _relations_by_family(spec.params, spec.alphabet)
    return [leading_monomial(f, spec.ordering) for fam in families for f in by_family[fam]]


def predicted_gb_leads(p: ConstructionParams, bound: int) -> set[Word]:
    """Leading monomials of the minimal basis up to ``bound``: (i)-(iii) plus x P_n y L e."""
    spec = build_presentation(p)
    leads = {w for w in relation_leads(spec) if degree(w, spec.alphabet) <= bound}
    return leads | predicted_gb_monomials(p, bound).word_set()


def overlap_chain_words(p: ConstructionParams, bound: int) -> set[Word]:
    """The 4n^3 words head.i.j tail.l y of degree 3d."""
    alphabet = construction_alphabet(p)
    if 3 * p.d > bound:
        return set()
    rng = range(1, p.n + 1)
    y = alphabet.index("y")
    return {
        (alphabet.index(f"{head}.{i}.{j}"), alphabet.index(f"{tail}.{l}"), y)
        for i in rng for j in rng for l in rng
        for head in ("a", "b") for tail in ("a", "b")
    }


def predicted_chain_words(p: ConstructionParams, t: int, bound: int) -> LanguageSlice:
    """Expected L_t of the associated monomial algebra, overlap chains included."""
    alphabet = construction_alphabet(p)
    if t == 0:
        return LanguageSlice.from_words(alphabet, bound, ((i,) for i in range(len(alphabet))))
    if t == 1:
        return LanguageSlice.from_words(alphabet, bound, predicted_gb_leads(p, bound))
    if t == 2:
        words = set(overlap_chain_words(p, bound))
        heads = [alphabet.index(f"a.{i}.{i}") for i in range(1, p.n + 1)] + [alphabet.index("b.1.1")]
        for mono in predicted_gb_monomials(p, max(bound - p.d, 0)):
            words.update((head,) + mono for head in heads)
        return LanguageSlice.from_words(alphabet, bound, words)
    return LanguageSlice(alphabet, bound)


def predicted_tor_series(
    p: ConstructionParams,
    h_l: RatSeries,
    bound: int,
    *,
    corrected: bool = False,
) -> list[RatSeries]:
    """Tor_1..Tor_4 generating functions; ``corrected`` adds 4n^3 z^{3d} to Tor_3."""
    n, m, d = p.n, p.m, p.d
    if h_l.bound < bound:
        raise InvalidInputError(f"H_L is known to degree {h_l.bound}, {bound} is needed")
    product = series_substitute_power(pn_series(n, bound), d) * h_l.truncate(bound)
    tor1 = RatSeries.monomial(d, 2 * n * n + 2 * n + 3, bound) + RatSeries.monomial(1, m, bound)
    tor2 = RatSeries.monomial(2 * d, 4 * n**3 + 4 * n * n + 3 * n + 1, bound) + series_shift_up(product, 3 * d)
    tor3 = series_shift_up(product, 4 * d).scale(n + 1)
    if corrected:
        tor3 = tor3 + RatSeries.monomial(3 * d, 4 * n**3, bound)
    return [tor1, tor2, tor3, RatSeries.zero(bound)]


def example1_params(n: int) -> ConstructionParams:
    """phi(a.i) = t.(2i-1), phi(b.i) = t.(2i)."""
    if n < 1:
        raise InvalidInputError("example 1 needs n >= 1")
    target = Alphabet.uniform(terminal_name(k) for k in range(2 * n))
    images = {}
    for i in range(1, n + 1):
        images[f"a.{i}"] = (2 * i - 2,)
        images[f"b.{i}"] = (2 * i - 1,)
    return ConstructionParams(n, Homomorphism(n, target, images))
