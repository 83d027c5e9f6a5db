"""Degree-truncated Buchberger procedure for two-sided ideals.

Pairs are processed in ascending degree of their composed word (normal
strategy) and pairs of composed degree above the bound are skipped.
Input relations and their reductions stay in the working set whatever
their degree, so they keep reducing lower-degree elements; only the
output is cut at the bound. For homogeneous input the leading monomials
returned up to the bound are those of the full minimal basis. For
inhomogeneous input a skipped pair can still have a low-degree
consequence, which is logged as a warning.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from services.errors import InvalidInputError
from services.freealg import NcPoly, OrderSpec, Word, degree, is_factor, leading_monomial
from services.groebner.obstructions import ObstructionSet
from utils.logging_setup import GB_TRACE_LOGGER

logger = logging.getLogger(__name__)
trace_logger = logging.getLogger(GB_TRACE_LOGGER)


@dataclass(frozen=True, slots=True)
class OverlapWitness:
    """``composed == left_prefix + lm(left) + left_suffix == right_prefix + lm(right) + right_suffix``."""

    composed: Word
    left_prefix: Word
    left_suffix: Word
    right_prefix: Word
    right_suffix: Word
    inclusion: bool = False


@dataclass(frozen=True, slots=True)
class SPair:
    left: NcPoly
    right: NcPoly
    witness: OverlapWitness
    degree: int


@dataclass(frozen=True)
class TruncatedGB:
    """Minimal monic basis up to leading-monomial degree ``bound``."""

    elements: tuple[NcPoly, ...]
    bound: int
    ordering: OrderSpec

    def leads(self) -> list[Word]:
        return [leading_monomial(g, self.ordering) for g in self.elements]

    def lead_set(self) -> set[Word]:
        return set(self.leads())

    def obstruction_set(self) -> ObstructionSet:
        return ObstructionSet(self.leads())

    def __len__(self) -> int:
        return len(self.elements)


def find_overlaps(u: Word, v: Word) -> list[OverlapWitness]:
    """Suffix-of-u = prefix-of-v overlaps, then proper inclusions of v in u."""
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise InvalidInputError("overlaps are defined for nonempty words")
    found: list[OverlapWitness] = []
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            found.append(
                OverlapWitness(
                    composed=u + v[k:],
                    left_prefix=(),
                    left_suffix=v[k:],
                    right_prefix=u[:-k],
                    right_suffix=(),
                )
            )
    if len(v) < len(u):
        for p in range(len(u) - len(v) + 1):
            if u[p:p + len(v)] == v:
                found.append(
                    OverlapWitness(
                        composed=u,
                        left_prefix=(),
                        left_suffix=(),
                        right_prefix=u[:p],
                        right_suffix=u[p + len(v):],
                        inclusion=True,
                    )
                )
    return found


def make_spair(left: NcPoly, right: NcPoly, witness: OverlapWitness, o: OrderSpec) -> SPair:
    return SPair(left, right, witness, degree(witness.composed, o.alphabet))


def s_polynomial(pair: SPair, o: OrderSpec) -> NcPoly:
    """left_prefix*left*left_suffix - right_prefix*right*right_suffix, leads normalized to 1."""
    wit = pair.witness
    lm_left = leading_monomial(pair.left, o)
    lm_right = leading_monomial(pair.right, o)
    if wit.left_prefix + lm_left + wit.left_suffix != wit.composed:
        raise InvalidInputError("witness does not place the left leading monomial")
    if wit.right_prefix + lm_right + wit.right_suffix != wit.composed:
        raise InvalidInputError("witness does not place the right leading monomial")
    left = pair.left.scale(1 / pair.left.coefficient(lm_left))
    right = pair.right.scale(1 / pair.right.coefficient(lm_right))
    return left.lr_mul(wit.left_prefix, wit.left_suffix) - right.lr_mul(wit.right_prefix, wit.right_suffix)


class _Reducer:
    """Lead-indexed view of a basis for repeated full reductions."""

    def __init__(self, o: OrderSpec) -> None:
        self.o = o
        self.by_lead: dict[Word, NcPoly] = {}
        self._lengths: list[int] = []

    def add(self, lead: Word, poly: NcPoly) -> None:
        self.by_lead[lead] = poly
        self._lengths = sorted({len(w) for w in self.by_lead})

    def remove(self, lead: Word) -> None:
        self.by_lead.pop(lead, None)
        self._lengths = sorted({len(w) for w in self.by_lead})

    def find(self, w: Word) -> tuple[int, Word] | None:
        """Leftmost position holding a lead; the highest lead wins at that position."""
        by_lead = self.by_lead
        if () in by_lead:
            return 0, ()
        size = len(w)
        for i in range(size):
            hits = [w[i:i + k] for k in self._lengths if i + k <= size and w[i:i + k] in by_lead]
            if hits:
                return i, max(hits, key=self.o.key)
        return None

    def reduce(self, terms: Mapping[Word, Fraction]) -> NcPoly:
        work = dict(terms)
        remainder: dict[Word, Fraction] = {}
        key = self.o.key
        while work:
            w = max(work, key=key)
            c = work.pop(w)
            hit = self.find(w)
            if hit is None:
                remainder[w] = c
                continue
            pos, lead = hit
            g = self.by_lead[lead]
            scale = c / g.coefficient(lead)
            prefix, suffix = w[:pos], w[pos + len(lead):]
            for u, cu in g:
                if u == lead:
                    continue
                target = prefix + u + suffix
                total = work.get(target, 0) - scale * cu
                if total:
                    work[target] = total
                else:
                    work.pop(target, None)
            if trace_logger.isEnabledFor(logging.DEBUG):
                trace_logger.debug("reduce %s at %d by lead %s", list(w), pos, list(lead))
        return NcPoly(remainder)


def normal_form(f: NcPoly, basis: Iterable[NcPoly], o: OrderSpec) -> NcPoly:
    """Full reduction of every term of ``f`` modulo ``basis``."""
    reducer = _Reducer(o)
    for g in basis:
        if g.is_zero():
            raise InvalidInputError("basis elements must be nonzero")
        reducer.add(leading_monomial(g, o), g)
    return reducer.reduce(f.terms)


def buchberger_truncated(relations: Iterable[NcPoly], o: OrderSpec, bound: int) -> TruncatedGB:
    """Minimal monic Gröbner basis restricted to leading-monomial degree <= bound."""
    if bound < 0:
        raise InvalidInputError("degree bound must be nonnegative")
    relations = list(relations)
    for k, rel in enumerate(relations):
        if rel.is_zero():
            raise InvalidInputError(f"relation {k} is zero")
        rel.check_letters(o.alphabet)

    alphabet = o.alphabet
    reducer = _Reducer(o)
    active: dict[int, tuple[Word, NcPoly]] = {}
    counter = itertools.count()
    # entries: (degree, seq, kind, payload)
    queue: list[tuple[int, int, str, object]] = []

    inhomogeneous = [k for k, rel in enumerate(relations) if len({degree(w, alphabet) for w, _ in rel}) > 1]
    if inhomogeneous:
        logger.warning(
            "%d inhomogeneous relations: leads up to degree %d may miss consequences of higher pairs",
            len(inhomogeneous), bound,
        )

    for rel in relations:
        lead = leading_monomial(rel, o)
        heapq.heappush(queue, (degree(lead, alphabet), next(counter), "poly", rel))

    def push_pairs(new_id: int) -> None:
        lead_new = active[new_id][0]
        for other_id, (lead_other, _) in list(active.items()):
            if not lead_other:
                continue
            orientations = [(new_id, other_id, lead_new, lead_other)]
            if other_id != new_id:
                orientations.append((other_id, new_id, lead_other, lead_new))
            for left_id, right_id, u, v in orientations:
                for wit in find_overlaps(u, v):
                    if wit.inclusion:
                        continue
                    deg = degree(wit.composed, alphabet)
                    if deg <= bound:
                        heapq.heappush(queue, (deg, next(counter), "pair", (left_id, right_id, wit)))

    def insert(poly: NcPoly, *, truncate: bool) -> None:
        reduced = reducer.reduce(poly.terms)
        if reduced.is_zero():
            return
        reduced = reduced.monic(o)
        lead = leading_monomial(reduced, o)
        if truncate and degree(lead, alphabet) > bound:
            return
        new_id = next(counter)
        displaced = [i for i, (w, _) in active.items() if is_factor(lead, w)]
        for i in displaced:
            old_lead, old_poly = active.pop(i)
            reducer.remove(old_lead)
            heapq.heappush(queue, (degree(old_lead, alphabet), next(counter), "poly", old_poly))
        active[new_id] = (lead, reduced)
        reducer.add(lead, reduced)
        logger.debug("new basis element of degree %d, lead %s", degree(lead, alphabet), list(lead))
        if lead:
            push_pairs(new_id)

    current_degree = -1
    while queue:
        deg, _, kind, payload = heapq.heappop(queue)
        if deg != current_degree:
            if current_degree >= 0:
                logger.info("degree %d done: %d basis elements", current_degree, len(active))
            current_degree = deg
        if kind == "poly":
            insert(payload, truncate=False)
            continue
        left_id, right_id, wit = payload
        if left_id not in active or right_id not in active:
            continue
        pair = SPair(active[left_id][1], active[right_id][1], wit, deg)
        spoly = s_polynomial(pair, o)
        if trace_logger.isEnabledFor(logging.DEBUG):
            trace_logger.debug("pair (%d, %d) at %s", left_id, right_id, list(wit.composed))
        insert(spoly, truncate=True)

    elements = [
        g for g in _interreduce([poly for _, poly in active.values()], o)
        if degree(leading_monomial(g, o), alphabet) <= bound
    ]
    elements.sort(key=lambda g: o.key(leading_monomial(g, o)))
    logger.info("truncated basis at degree %d: %d elements", bound, len(elements))
    return TruncatedGB(tuple(elements), bound, o)


def _interreduce(polys: list[NcPoly], o: OrderSpec) -> list[NcPoly]:
    """Tail-reduce each element by the others; leads are already factor-free."""
    result: list[NcPoly] = []
    for k, g in enumerate(polys):
        lead = leading_monomial(g, o)
        others = _Reducer(o)
        for j, h in enumerate(polys):
            if j != k:
                others.add(leading_monomial(h, o), h)
        tail = NcPoly({w: c for w, c in g if w != lead})
        reduced_tail = others.reduce(tail.terms)
        result.append((NcPoly.monomial(lead, g.coefficient(lead)) + reduced_tail).monic(o))
    return result


def unresolved_pairs(gb: TruncatedGB) -> list[SPair]:
    """Pairs of composed degree <= bound whose s-polynomial does not reduce to 0."""
    o = gb.ordering
    reducer = _Reducer(o)
    for g in gb.elements:
        reducer.add(leading_monomial(g, o), g)
    failures: list[SPair] = []
    for left, right in itertools.product(gb.elements, repeat=2):
        u, v = leading_monomial(left, o), leading_monomial(right, o)
        if not u or not v:
            continue
        for wit in find_overlaps(u, v):
            pair = make_spair(left, right, wit, o)
            if pair.degree > gb.bound:
                continue
            if not reducer.reduce(s_polynomial(pair, o).terms).is_zero():
                failures.append(pair)
    return failures
