"""JSON codecs for presentations, bases, chain tables and series.

Every document carries ``"schema": "algser/1"`` and a ``"kind"``. Output is
canonical: sorted keys and "p/q" rational strings.
"""

from __future__ import annotations

import json
from typing import Any

from services.chains import ChainTable
from services.construction import ConstructionParams, PresentationSpec
from services.errors import InvalidInputError
from services.freealg import Alphabet, NcPoly, OrderSpec, Word, leading_monomial
from services.groebner import ObstructionSet, TruncatedGB
from services.langkit import LanguageSlice, parse_homomorphism
from services.series import RatSeries
from utils.formatters import fmt_rational, fmt_word, parse_rational

SCHEMA = "algser/1"


def dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def make_document(kind: str, **body: Any) -> dict[str, Any]:
    return {"schema": SCHEMA, "kind": kind, **body}


def _expect(data: Any, *kinds: str) -> dict[str, Any]:
    if not isinstance(data, dict):
        raise InvalidInputError("document must be a JSON object")
    if data.get("schema") != SCHEMA:
        raise InvalidInputError(f"unsupported schema {data.get('schema')!r}, expected {SCHEMA!r}")
    if data.get("kind") not in kinds:
        raise InvalidInputError(f"expected a {' or '.join(kinds)} document, got {data.get('kind')!r}")
    return data


# ---------- alphabet, words, polynomials ----------

def alphabet_to_json(a: Alphabet) -> list[dict[str, Any]]:
    return [{"name": name, "weight": weight} for name, weight in zip(a.names, a.weights)]


def alphabet_from_json(items: Any) -> Alphabet:
    if not isinstance(items, list):
        raise InvalidInputError("alphabet must be a list of {name, weight}")
    try:
        return Alphabet.from_pairs((item["name"], item["weight"]) for item in items)
    except (KeyError, TypeError):
        raise InvalidInputError("alphabet entries need name and weight") from None


def word_to_json(w: Word, a: Alphabet) -> list[str]:
    return a.names_of(w)


def word_from_json(names: Any, a: Alphabet) -> Word:
    if not isinstance(names, list):
        raise InvalidInputError("a word is a list of variable names")
    return a.word(names)


def poly_to_json(f: NcPoly, o: OrderSpec) -> list[dict[str, Any]]:
    return [{"coeff": fmt_rational(c), "word": word_to_json(w, o.alphabet)} for w, c in f.sorted_terms(o)]


def poly_from_json(terms: Any, a: Alphabet) -> NcPoly:
    if not isinstance(terms, list):
        raise InvalidInputError("a polynomial is a list of {coeff, word}")
    pairs = []
    for term in terms:
        if not isinstance(term, dict) or "coeff" not in term or "word" not in term:
            raise InvalidInputError("polynomial terms need coeff and word")
        try:
            coeff = parse_rational(term["coeff"])
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"bad coefficient {term['coeff']!r}") from None
        pairs.append((word_from_json(term["word"], a), coeff))
    return NcPoly(pairs)


# ---------- presentations ----------

def presentation_to_json(spec: PresentationSpec) -> dict[str, Any]:
    o = spec.ordering
    body: dict[str, Any] = {
        "alphabet": alphabet_to_json(spec.alphabet),
        "ordering": o.scheme,
        "relations": [
            {"lead": word_to_json(leading_monomial(f, o), spec.alphabet), "terms": poly_to_json(f, o)}
            for f in spec.sorted_relations()
        ],
        "counts": {"generators": len(spec.alphabet), "relations": len(spec.relations)},
    }
    if spec.preset is not None:
        body["preset"] = spec.preset
    if spec.params is not None:
        body["params"] = {"n": spec.params.n, "homomorphism": spec.params.h.to_description()}
    return make_document("presentation", **body)


def presentation_from_json(data: Any) -> PresentationSpec:
    data = _expect(data, "presentation")
    alphabet = alphabet_from_json(data.get("alphabet"))
    ordering = OrderSpec(alphabet, data.get("ordering", "deglex"))
    raw_relations = data.get("relations", [])
    if not isinstance(raw_relations, list):
        raise InvalidInputError("relations must be a list")
    relations = []
    for k, rel in enumerate(raw_relations):
        terms = rel.get("terms") if isinstance(rel, dict) else rel
        f = poly_from_json(terms, alphabet)
        if f.is_zero():
            raise InvalidInputError(f"relation {k} is zero")
        relations.append(f)
    params = None
    if "params" in data:
        h = parse_homomorphism(data["params"].get("homomorphism"))
        params = ConstructionParams(data["params"].get("n", h.n), h)
    return PresentationSpec(alphabet, ordering, tuple(relations), params=params, preset=data.get("preset"))


# ---------- bases and obstructions ----------

def gb_to_json(gb: TruncatedGB, **meta: Any) -> dict[str, Any]:
    o = gb.ordering
    return make_document(
        "gb",
        alphabet=alphabet_to_json(o.alphabet),
        bound=gb.bound,
        elements=[
            {"lead": word_to_json(leading_monomial(g, o), o.alphabet), "terms": poly_to_json(g, o)}
            for g in gb.elements
        ],
        **meta,
    )


def obstructions_from_json(data: Any) -> tuple[ObstructionSet, Alphabet]:
    """Accepts an obstructions document or a gb document (its leads)."""
    data = _expect(data, "obstructions", "gb")
    alphabet = alphabet_from_json(data.get("alphabet"))
    if data["kind"] == "gb":
        words = [word_from_json(el.get("lead"), alphabet) for el in data.get("elements", [])]
    else:
        words = [word_from_json(w, alphabet) for w in data.get("words", [])]
    return ObstructionSet(words, minimize=True), alphabet


def obstructions_to_json(obs: ObstructionSet, a: Alphabet) -> dict[str, Any]:
    return make_document("obstructions", alphabet=alphabet_to_json(a), words=[word_to_json(w, a) for w in obs])


# ---------- slices, chain tables, series ----------

def slice_to_json(s: LanguageSlice) -> dict[str, list[str]]:
    return {
        str(deg): sorted(fmt_word(s.alphabet.names_of(w)) for w in s.at(deg))
        for deg in sorted(s.by_degree)
    }


def chain_table_to_json(table: ChainTable, *, with_words: bool = True, **meta: Any) -> dict[str, Any]:
    body: dict[str, Any] = {"bound": table.bound, "dims": table.dims(), **meta}
    if with_words:
        body["chains"] = {str(t): slice_to_json(s) for t, s in enumerate(table.slices)}
    return make_document("chains", **body)


def series_to_json(s: RatSeries) -> dict[str, Any]:
    return {"bound": s.bound, "coefficients": [fmt_rational(c) for c in s.coeffs]}


def series_from_json(data: Any) -> RatSeries:
    if not isinstance(data, dict) or not isinstance(data.get("coefficients"), list):
        raise InvalidInputError("series needs a coefficients list")
    try:
        values = [parse_rational(c) for c in data["coefficients"]]
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError("series coefficients must be p/q strings") from None
    return RatSeries.from_coeffs(values, data.get("bound", len(values) - 1))
