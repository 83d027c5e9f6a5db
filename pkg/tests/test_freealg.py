from fractions import Fraction

import pytest

from services.errors import InvalidInputError, UndefinedLeadingMonomialError
from services.freealg import Alphabet, Cmp, NcPoly, OrderSpec, compare_deglex, degree, is_factor, leading_monomial
from services.presets import preset_presentation


def test_degree_is_weighted_sum():
    a = Alphabet.uniform(["t.1", "t.2"])
    assert degree((), a) == 0
    assert degree(a.word("t.1 t.2 t.1"), a) == 3


def test_degree_in_example3_setting():
    a = preset_presentation("example3").alphabet
    assert degree(a.word("x y e"), a) == 9
    assert a.weight(a.index("t.1")) == 1


def test_degree_rejects_foreign_letter():
    a = Alphabet.uniform(["x"])
    with pytest.raises(InvalidInputError):
        degree((0, 3), a)


def test_alphabet_validation():
    with pytest.raises(InvalidInputError):
        Alphabet.uniform(["x", "x"])
    with pytest.raises(InvalidInputError):
        Alphabet(("x",), (0,))
    with pytest.raises(InvalidInputError):
        Alphabet.uniform(["has space"])


def test_compare_degree_first(abc_order):
    a = abc_order.alphabet
    assert compare_deglex(a.word("b"), a.word("a b"), abc_order) is Cmp.LT
    assert compare_deglex(a.word("a b"), a.word("b a"), abc_order) is Cmp.GT
    assert compare_deglex(a.word("c a"), a.word("c a"), abc_order) is Cmp.EQ


def test_compare_uses_weights():
    a = Alphabet.from_pairs([("x", 3), ("t", 1)])
    o = OrderSpec(a)
    # t t t t has degree 4 > 3
    assert o.compare(a.word("x"), a.word("t t t t")) is Cmp.LT
    assert o.compare(a.word("x"), a.word("t t t")) is Cmp.GT


def test_construction_precedence(example1):
    a, o = example1.alphabet, example1.ordering
    assert o.compare(a.word("a.1.1 x"), a.word("x a.1.1")) is Cmp.GT
    assert o.compare(a.word("b.1 y"), a.word("y t.2")) is Cmp.GT


def test_order_is_multiplicative(abc_order, rng):
    size = len(abc_order.alphabet)
    for _ in range(200):
        u, v, left, right = (tuple(rng.randrange(size) for _ in range(rng.randint(0, 4))) for _ in range(4))
        assert compare_deglex(left + u + right, left + v + right, abc_order) == compare_deglex(u, v, abc_order)


def test_leading_monomial(example1):
    o = example1.ordering
    first = example1.relations[0]
    assert example1.alphabet.names_of(leading_monomial(first, o)) == ["a.1.1", "x"]
    assert leading_monomial(NcPoly.constant(5), o) == ()
    with pytest.raises(UndefinedLeadingMonomialError):
        leading_monomial(NcPoly.zero(), o)


def test_ncpoly_drops_zero_terms(abc):
    ab, ba = abc.word("a b"), abc.word("b a")
    f = NcPoly({ab: 1, ba: Fraction(1, 2)})
    g = NcPoly({ab: -1})
    assert (f + g).support() == [ba]
    assert (f - f).is_zero()
    assert NcPoly([(ab, 2), (ab, -2)]).is_zero()


def test_ncpoly_product_is_concatenation(abc):
    a, b = NcPoly.monomial(abc.word("a")), NcPoly.monomial(abc.word("b"))
    assert (a * b).support() == [abc.word("a b")]
    assert (a * b) != (b * a)
    assert ((a + b) * 3).coefficient(abc.word("a")) == 3


def test_ncpoly_rejects_inexact_coefficients(abc):
    with pytest.raises(InvalidInputError):
        NcPoly({abc.word("a"): 0.5})


def test_monic_and_sorted_terms(abc_order):
    a = abc_order.alphabet
    f = NcPoly({a.word("c"): 2, a.word("a b"): 4})
    monic = f.monic(abc_order)
    assert monic.coefficient(a.word("a b")) == 1
    assert monic.coefficient(a.word("c")) == Fraction(1, 2)
    assert [w for w, _ in f.sorted_terms(abc_order)] == [a.word("a b"), a.word("c")]


def test_is_factor():
    assert is_factor((1, 2), (0, 1, 2))
    assert not is_factor((2, 1), (0, 1, 2))
    assert is_factor((), (0,))


def _word(rng, size, max_len=4):
    return tuple(rng.randrange(size) for _ in range(rng.randint(0, max_len)))


def _poly(rng, size):
    terms = [(_word(rng, size, 3), Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(rng.randint(1, 4))]
    f = NcPoly(terms)
    return f if not f.is_zero() else NcPoly.constant(1)


def test_order_is_total_and_degree_compatible(rng):
    a = Alphabet.from_pairs([("x", 2), ("y", 1), ("z", 1)])
    o = OrderSpec(a)
    for _ in range(300):
        u, v, w = (_word(rng, len(a)) for _ in range(3))
        assert compare_deglex(u, v, o) == -compare_deglex(v, u, o)
        assert (compare_deglex(u, v, o) is Cmp.EQ) == (u == v)
        if compare_deglex(u, v, o) is Cmp.LT and compare_deglex(v, w, o) is Cmp.LT:
            assert compare_deglex(u, w, o) is Cmp.LT
        if degree(u, a) < degree(v, a):
            assert compare_deglex(u, v, o) is Cmp.LT


def test_ncpoly_ring_laws(abc_order, rng):
    size = len(abc_order.alphabet)
    for _ in range(60):
        f, g, h = (_poly(rng, size) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert leading_monomial(f * g, abc_order) == leading_monomial(f, abc_order) + leading_monomial(g, abc_order)
