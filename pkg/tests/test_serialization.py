import json

import pytest

from services.chains import tor_table
from services.errors import InvalidInputError
from services.freealg import Alphabet
from services.groebner import ObstructionSet
from services.serialization import (
    chain_table_to_json,
    dumps,
    gb_to_json,
    obstructions_from_json,
    obstructions_to_json,
    poly_from_json,
    presentation_from_json,
    presentation_to_json,
    series_from_json,
    series_to_json,
)
from services.series import dyck_series


def test_presentation_document(example1):
    doc = presentation_to_json(example1)
    assert doc["kind"] == "presentation"
    assert doc["params"]["homomorphism"]["images"]["a.1"] == ["t.1"]
    commutator = next(rel for rel in doc["relations"] if rel["lead"] == ["a.1.1", "x"])
    assert commutator["terms"][0] == {"coeff": "1", "word": ["a.1.1", "x"]}
    restored = presentation_from_json(json.loads(dumps(doc)))
    assert restored.alphabet == example1.alphabet
    assert set(restored.relations) == set(example1.relations)
    assert restored.params.m == 2
    assert restored.preset == "example1"


def test_dumps_is_canonical(example1):
    text = dumps(presentation_to_json(example1))
    assert text == dumps(json.loads(text))
    assert text.endswith("\n")


def test_document_checks():
    with pytest.raises(InvalidInputError, match="schema"):
        presentation_from_json({"schema": "other/2", "kind": "presentation"})
    with pytest.raises(InvalidInputError, match="presentation"):
        presentation_from_json({"schema": "algser/1", "kind": "gb"})
    with pytest.raises(InvalidInputError):
        presentation_from_json([])


def test_zero_relation_rejected():
    doc = {
        "schema": "algser/1",
        "kind": "presentation",
        "alphabet": [{"name": "x", "weight": 1}],
        "relations": [{"terms": [{"coeff": "1", "word": ["x"]}, {"coeff": "-1", "word": ["x"]}]}],
    }
    with pytest.raises(InvalidInputError, match="zero"):
        presentation_from_json(doc)


def test_poly_terms():
    a = Alphabet.uniform(["x", "y"])
    f = poly_from_json([{"coeff": "3/4", "word": ["x", "y"]}, {"coeff": 2, "word": []}], a)
    assert f.coefficient(a.word("x y")) * 4 == 3
    assert f.coefficient(()) == 2
    with pytest.raises(InvalidInputError):
        poly_from_json([{"coeff": "abc", "word": ["x"]}], a)
    with pytest.raises(InvalidInputError):
        poly_from_json([{"coeff": "1", "word": ["z"]}], a)


def test_obstructions_from_gb_document(example1_gb5, example1):
    obs, alphabet = obstructions_from_json(json.loads(dumps(gb_to_json(example1_gb5))))
    assert alphabet == example1.alphabet
    assert obs == example1_gb5.obstruction_set()
    again, _ = obstructions_from_json(obstructions_to_json(obs, alphabet))
    assert again == obs


def test_chain_table_document():
    x = Alphabet.uniform(["x"])
    table = tor_table(ObstructionSet([(0, 0)]), x, 1, 3)
    doc = chain_table_to_json(table, meta={"command": "chains"})
    assert doc["dims"] == [[0, 1, 0, 0], [0, 0, 1, 0]]
    assert doc["chains"]["0"] == {"1": ["x"]}
    assert "chains" not in chain_table_to_json(table, with_words=False)


def test_series_document():
    doc = series_to_json(dyck_series(1, 4))
    assert doc == {"bound": 4, "coefficients": ["1", "0", "1", "0", "2"]}
    assert series_from_json(doc) == dyck_series(1, 4)
    with pytest.raises(InvalidInputError):
        series_from_json({"coefficients": ["x"]})
