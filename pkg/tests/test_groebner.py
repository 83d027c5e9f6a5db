import itertools

import pytest

from services.construction import predicted_gb_leads
from services.errors import InvalidInputError
from services.freealg import Alphabet, NcPoly, OrderSpec, is_factor
from services.groebner import (
    FactorAutomaton,
    ObstructionSet,
    OverlapWitness,
    SPair,
    buchberger_truncated,
    find_overlaps,
    make_spair,
    normal_form,
    normal_word_counts,
    s_polynomial,
    unresolved_pairs,
)
from tests.conftest import names


def test_find_overlaps_suffix_prefix():
    found = find_overlaps((0, 1), (1, 2))
    assert len(found) == 1
    wit = found[0]
    assert wit.composed == (0, 1, 2)
    assert wit.left_suffix == (2,)
    assert wit.right_prefix == (0,)
    assert not wit.inclusion


def test_find_overlaps_self_and_none():
    assert [w.composed for w in find_overlaps((0, 0), (0, 0))] == [(0, 0, 0)]
    assert find_overlaps((0, 1), (0, 1)) == []


def test_find_overlaps_proper_inclusion():
    found = find_overlaps((0, 1, 2), (1,))
    assert [(w.inclusion, w.right_prefix, w.right_suffix) for w in found] == [(True, (0,), (2,))]


def test_find_overlaps_rejects_empty():
    with pytest.raises(InvalidInputError):
        find_overlaps((), (0,))


def test_s_polynomial(abc_order):
    a = abc_order.alphabet
    f1 = NcPoly({a.word("a b"): 1, a.word("c"): -1})
    f2 = NcPoly({a.word("b c"): 1, a.word("a"): -1})
    (wit,) = find_overlaps(a.word("a b"), a.word("b c"))
    s = s_polynomial(make_spair(f1, f2, wit, abc_order), abc_order)
    assert s == NcPoly({a.word("a a"): 1, a.word("c c"): -1})


def test_s_polynomial_rejects_bad_witness(abc_order):
    a = abc_order.alphabet
    f = NcPoly.monomial(a.word("a b"))
    wit = OverlapWitness(composed=a.word("a b c"), left_prefix=(), left_suffix=(), right_prefix=(), right_suffix=())
    with pytest.raises(InvalidInputError):
        s_polynomial(SPair(f, f, wit, 3), abc_order)


def test_normal_form(abc_order):
    a = abc_order.alphabet
    basis = [NcPoly({a.word("a b"): 1, a.word("c"): -1})]
    f = NcPoly({a.word("a a b"): 2, a.word("b"): 1})
    assert normal_form(f, basis, abc_order) == NcPoly({a.word("a c"): 2, a.word("b"): 1})


def test_commutator_is_already_a_basis():
    a = Alphabet.uniform(["x", "y"])
    o = OrderSpec(a)
    rel = NcPoly({a.word("x y"): 1, a.word("y x"): -1})
    gb = buchberger_truncated([rel], o, 4)
    assert gb.leads() == [a.word("x y")]
    assert normal_word_counts(gb.obstruction_set(), a, 4) == [1, 2, 3, 4, 5]
    assert unresolved_pairs(gb) == []


def test_unit_collapses_basis():
    a = Alphabet.uniform(["x"])
    o = OrderSpec(a)
    gb = buchberger_truncated([NcPoly({(0,): 1, (): -1}), NcPoly.monomial((0,))], o, 3)
    assert gb.elements == (NcPoly.constant(1),)


def test_completion_adds_overlap_element():
    # a a - a b completes with a b a - a b b
    a = Alphabet.uniform(["a", "b"])
    o = OrderSpec(a)
    gb = buchberger_truncated([NcPoly({a.word("a a"): 1, a.word("a b"): -1})], o, 3)
    assert names(a, gb.leads()) >= {"a a", "a b a"}
    assert unresolved_pairs(gb) == []


def test_leads_above_bound_are_dropped(abc_order):
    a = abc_order.alphabet
    rel = NcPoly.monomial(a.word("a b c"))
    assert len(buchberger_truncated([rel], abc_order, 2)) == 0


def test_zero_relation_rejected(abc_order):
    with pytest.raises(InvalidInputError):
        buchberger_truncated([NcPoly.zero()], abc_order, 3)


def test_example1_basis_leads(example1, example1_gb5):
    assert example1_gb5.lead_set() == predicted_gb_leads(example1.params, 5)
    a = example1.alphabet
    degree3_up = {w for w in example1_gb5.leads() if a.degree(w) >= 3}
    assert names(a, degree3_up) == {"x y e", "x e y e", "x e e y e", "x y t.1 t.2 e"}
    assert len(example1_gb5) == 16


def test_example1_basis_is_closed(example1_gb5):
    assert unresolved_pairs(example1_gb5) == []


def test_obstruction_set_checks_factors():
    with pytest.raises(InvalidInputError):
        ObstructionSet([(0,), (1, 0)])
    obs = ObstructionSet([(0,), (1, 0)], minimize=True)
    assert obs.words == frozenset({(0,)})
    with pytest.raises(InvalidInputError):
        ObstructionSet([()])


def test_obstruction_queries():
    obs = ObstructionSet([(0, 1), (1, 1)])
    assert obs.contains_factor((2, 0, 1))
    assert not obs.contains_factor((1, 0, 2))
    assert [start for start, _, _ in obs.occurrences((0, 1, 1))] == [0, 1]
    assert obs.min_end_from((0, 1, 1)) == [2, 3, None, None]


def test_factor_automaton():
    automaton = FactorAutomaton([(0, 0)], 2)
    assert automaton.accepts_avoiding((0, 1, 0))
    assert not automaton.accepts_avoiding((1, 0, 0, 1))


def test_normal_word_counts():
    ab = Alphabet.uniform(["a", "b"])
    # words avoiding a a: Fibonacci
    assert normal_word_counts(ObstructionSet([(0, 0)]), ab, 4) == [1, 2, 3, 5, 8]
    weighted = Alphabet.from_pairs([("x", 2), ("t", 1)])
    assert normal_word_counts(ObstructionSet([]), weighted, 4) == [1, 1, 2, 3, 5]


def test_example2_normal_word_counts(example2):
    gb = buchberger_truncated(example2.relations, example2.ordering, 3)
    assert normal_word_counts(gb.obstruction_set(), example2.alphabet, 3) == [1, 17, 234, 3074]


def _naive_normal_counts(obs_words, size, bound):
    counts = []
    for length in range(bound + 1):
        counts.append(
            sum(
                1
                for w in itertools.product(range(size), repeat=length)
                if not any(is_factor(o, w) for o in obs_words)
            )
        )
    return counts


def test_normal_word_counts_match_brute_force(rng):
    for _ in range(12):
        size = rng.randint(1, 3)
        a = Alphabet.uniform([f"x{i}" for i in range(size)])
        words = {tuple(rng.randrange(size) for _ in range(rng.randint(1, 3))) for _ in range(rng.randint(1, 4))}
        obs = ObstructionSet(words, minimize=True)
        bound = rng.randint(0, 7)
        assert normal_word_counts(obs, a, bound) == _naive_normal_counts(obs.words, size, bound)


def test_basis_of_a_basis_is_itself(example1_gb5):
    again = buchberger_truncated(example1_gb5.elements, example1_gb5.ordering, 5)
    assert set(again.elements) == set(example1_gb5.elements)

    a = Alphabet.uniform(["a", "b"])
    gb = buchberger_truncated([NcPoly({a.word("a a"): 1, a.word("a b"): -1})], OrderSpec(a), 4)
    assert set(buchberger_truncated(gb.elements, gb.ordering, 4).elements) == set(gb.elements)


def test_lower_bound_is_a_prefix(example1, example1_gb5):
    a = example1.alphabet
    gb4 = buchberger_truncated(example1.relations, example1.ordering, 4)
    assert set(gb4.elements) == {g for g, w in zip(example1_gb5.elements, example1_gb5.leads()) if a.degree(w) <= 4}
    counts5 = normal_word_counts(example1_gb5.obstruction_set(), a, 5)
    assert normal_word_counts(gb4.obstruction_set(), a, 4) == counts5[:5]


def test_high_degree_relation_still_reduces_input():
    # x x x + y and x x x give y, whose degree is below the relations'
    a = Alphabet.uniform(["x", "y"])
    o = OrderSpec(a)
    rels = [NcPoly({a.word("x x x"): 1, a.word("y"): 1}), NcPoly.monomial(a.word("x x x"))]
    assert names(a, buchberger_truncated(rels, o, 2).leads()) == {"y"}
    assert names(a, buchberger_truncated(rels, o, 3).leads()) == {"y", "x x x"}
