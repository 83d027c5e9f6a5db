import pytest

from services.errors import GrammarLoadError, InvalidInputError
from services.langkit import (
    LanguageSlice,
    bracket_alphabet,
    closer,
    enumerate_dyck,
    enumerate_pn,
    grammar_language,
    image_language,
    is_dyck_word,
    is_pn_word,
    membership,
    parse_grammar,
    parse_homomorphism,
)
from services.presets import preset_grammar, preset_params, shipped_grammar
from services.series import pn_series


def _grammar(productions, weights, nonterminals=("S",)):
    return {
        "nonterminals": list(nonterminals),
        "start": nonterminals[0],
        "productions": [{"lhs": lhs, "rhs": list(rhs)} for lhs, rhs in productions],
        "weights": weights,
    }


def test_bracket_alphabet_layout():
    a = bracket_alphabet(2, with_e=True)
    assert a.names == ("a.1", "a.2", "b.1", "b.2", "e")
    assert a.names[closer(2, 1)] == "b.1"


def test_dyck_counts():
    assert enumerate_dyck(1, 8).sizes() == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert enumerate_dyck(2, 4).sizes() == [1, 0, 2, 0, 8]


def test_dyck_words_are_balanced():
    slice_ = enumerate_dyck(2, 6)
    assert all(is_dyck_word(w, 2) for w in slice_)
    a = slice_.alphabet
    assert not is_dyck_word(a.word("a.1 b.2"), 2)
    assert not is_dyck_word(a.word("b.1 a.1"), 2)


def test_pn_enumeration():
    slice_ = enumerate_pn(1, 4)
    a = slice_.alphabet
    assert slice_.sizes() == [1, 1, 1, 2, 3]
    assert a.word("a.1 b.1 e") in slice_
    assert all(is_pn_word(w, 1) for w in slice_)
    assert not is_pn_word(a.word("a.1 b.1"), 1)
    assert not is_pn_word(a.word("b.1 a.1 e"), 1)


def test_slice_rejects_wrong_degree():
    a = bracket_alphabet(1)
    with pytest.raises(InvalidInputError):
        LanguageSlice(a, 2, {2: frozenset({(0,)})})
    assert LanguageSlice.from_words(a, 1, [(0,), (0, 1)]).sizes() == [0, 1]


def test_homomorphism_errors():
    good = {"n": 1, "terminals": ["t"], "images": {"a.1": ["t"], "b.1": ["t"]}}
    assert parse_homomorphism(good).d == 1
    with pytest.raises(InvalidInputError, match="b.1"):
        parse_homomorphism({**good, "images": {"a.1": ["t"]}})
    with pytest.raises(InvalidInputError):
        parse_homomorphism({**good, "images": {"a.1": ["t"], "b.1": []}})
    with pytest.raises(InvalidInputError):
        parse_homomorphism({**good, "images": {"a.1": ["t"], "b.1": ["u"]}})


def test_image_language_example2():
    h = preset_params("example2").h
    assert image_language(h, 8).sizes() == [1, 0, 2, 0, 6, 0, 20, 0, 70]


def test_image_language_example3_degrees():
    h = preset_params("example3").h
    assert h.d == 3
    assert image_language(h, 12).sizes() == [1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 8]


def test_grammar_membership():
    g = shipped_grammar("dyck1.json")
    a = g.terminals
    assert membership(g, ())
    assert membership(g, a.word("a.1 a.1 b.1 b.1 a.1 b.1"))
    assert not membership(g, a.word("b.1 a.1"))
    assert grammar_language(g, 6).sizes() == [1, 0, 1, 0, 2, 0, 5]


def test_example2_grammar_matches_image():
    g = preset_grammar("example2")
    assert grammar_language(g, 6).sizes() == [1, 0, 2, 0, 6, 0, 20]


def test_grammar_with_unit_chain():
    g = parse_grammar(_grammar([("S", ["A"]), ("A", ["t"]), ("A", [])], {"t": 1}, ("S", "A")))
    assert membership(g, ())
    assert grammar_language(g, 2).sizes() == [1, 1, 0]


def test_grammar_reports_every_structural_problem():
    description = _grammar(
        [("S", ["t"]), ("U", ["U"]), ("V", [])],
        {"t": 1},
        ("S", "U", "V"),
    )
    with pytest.raises(GrammarLoadError) as info:
        parse_grammar(description)
    codes = {v.code for v in info.value.violations}
    assert codes == {"UNPRODUCTIVE_NONTERMINAL", "UNREACHABLE_NONTERMINAL"}
    assert "U" in info.value.symbols


def test_grammar_shape_errors():
    with pytest.raises(GrammarLoadError):
        parse_grammar([])
    with pytest.raises(GrammarLoadError):
        parse_grammar(_grammar([("S", ["q"])], {"t": 1}))
    with pytest.raises(GrammarLoadError):
        parse_grammar(_grammar([("S", ["S"])], {"S": 1}))


@pytest.mark.parametrize(("n", "bound"), [(1, 10), (2, 8)])
def test_pn_sizes_match_series(n, bound):
    assert enumerate_pn(n, bound).sizes() == pn_series(n, bound).as_integers()


def _preimage_counts(h, bound):
    counts = [0] * (bound + 1)
    for w in enumerate_dyck(h.n, bound // h.min_image_degree):
        deg = h.target.degree(h.apply(w))
        if deg <= bound:
            counts[deg] += 1
    return counts


def test_image_language_collapses_equal_images():
    h = parse_homomorphism({"n": 1, "terminals": ["t"], "images": {"a.1": ["t"], "b.1": ["t"]}})
    assert image_language(h, 8).sizes() == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    assert _preimage_counts(h, 8) == [1, 0, 1, 0, 2, 0, 5, 0, 14]


@pytest.mark.parametrize("preset", ["example2", "example3"])
def test_image_language_never_exceeds_preimages(preset):
    h = preset_params(preset).h
    bound = 12
    sizes = image_language(h, bound).sizes()
    assert all(s <= c for s, c in zip(sizes, _preimage_counts(h, bound), strict=True))
