from fractions import Fraction

import pytest

from services.chains import full_tor_table
from services.errors import (
    FixedPointError,
    IntegralityError,
    InternalError,
    InvalidInputError,
    NotInvertibleError,
    NumericError,
)
from services.freealg import Alphabet
from services.groebner import ObstructionSet
from services.langkit import parse_grammar
from services.presets import preset_grammar, shipped_grammar
from services.series import (
    RatSeries,
    central_binomial_series,
    cfg_series,
    check_counting_series,
    dyck_pn_product_closed_form,
    dyck_series,
    first_disagreement,
    from_counts,
    hilbert_example_closed_form,
    hilbert_from_tor,
    hilbert_formula,
    pn_series,
    pn_surd_series,
    series_invert,
    series_shift_down,
    series_sqrt,
    series_substitute_power,
    tor3_remark_series,
)


def ints(s: RatSeries) -> list[int]:
    return s.as_integers()


def test_ratseries_basics():
    s = RatSeries.from_coeffs([1, 2], 3)
    assert s.coeffs == (1, 2, 0, 0)
    assert s.coefficient(9) == 0
    assert RatSeries.from_coeffs([1, 2, 3], 2) == RatSeries.from_coeffs([1, 2], 1)
    assert (s * 2).coeffs[1] == 4
    with pytest.raises(IntegralityError):
        RatSeries.from_coeffs([Fraction(1, 2)], 0).as_integers()


def test_invert_known_low_terms():
    s = RatSeries.from_coeffs([1, -17, 55, 1, -2], 4)
    assert ints(series_invert(s))[:3] == [1, 17, 234]


def test_invert_and_sqrt_errors():
    with pytest.raises(NotInvertibleError):
        series_invert(RatSeries.from_coeffs([0, 1], 3))
    with pytest.raises(NumericError):
        series_sqrt(RatSeries.from_coeffs([4, 1], 3))


def test_round_trips(rng):
    for _ in range(100):
        size = rng.randint(0, 10)
        a = RatSeries.from_coeffs([1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(size)], size)
        assert series_invert(series_invert(a)) == a
        root = series_sqrt(a)
        assert root * root == a
        assert a * series_invert(a) == RatSeries.one(size)


def test_substitute_and_shift():
    s = RatSeries.from_coeffs([1, 2, 3], 6)
    assert series_substitute_power(s, 3).coeffs == (1, 0, 0, 2, 0, 0, 3)
    with pytest.raises(InternalError):
        series_shift_down(s, 1)


def test_dyck_series():
    assert ints(dyck_series(1, 8)) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert ints(dyck_series(2, 4)) == [1, 0, 2, 0, 8]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dyck_functional_equation(n):
    h = dyck_series(n, 30)
    assert h == RatSeries.one(30) + RatSeries.monomial(2, n, 30) * h * h


def test_pn_series_forms_agree():
    assert ints(pn_series(1, 4)) == [1, 1, 1, 2, 3]
    for n in (1, 2, 3):
        assert pn_surd_series(n, 20) == pn_series(n, 20)
        assert dyck_pn_product_closed_form(n, 20) == pn_series(n, 20) * dyck_series(n, 20)


def test_central_binomial():
    assert ints(central_binomial_series(6)) == [1, 0, 2, 0, 6, 0, 20]


def test_cfg_series_shipped():
    assert ints(cfg_series(shipped_grammar("dyck1.json"), 8)) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert ints(cfg_series(shipped_grammar("singleton.json"), 2)) == [0, 1, 0]
    assert cfg_series(preset_grammar("example2"), 12) == central_binomial_series(12)


def test_cfg_series_example3_surd():
    expected = series_substitute_power(dyck_series(2, 24), 3)
    assert cfg_series(preset_grammar("example3"), 24) == expected


def test_cfg_series_weighted_terminals():
    g = parse_grammar({
        "nonterminals": ["S"],
        "start": "S",
        "productions": [{"lhs": "S", "rhs": []}, {"lhs": "S", "rhs": ["u", "S"]}, {"lhs": "S", "rhs": ["w", "S"]}],
        "weights": {"u": 1, "w": 2},
    })
    # 1 / (1 - z - z^2)
    assert ints(cfg_series(g, 6)) == [1, 1, 2, 3, 5, 8, 13]


def test_cfg_series_diverging_system():
    g = parse_grammar({
        "nonterminals": ["S"],
        "start": "S",
        "productions": [{"lhs": "S", "rhs": []}, {"lhs": "S", "rhs": ["S", "S"]}],
        "weights": {"t": 1},
    })
    with pytest.raises(FixedPointError) as info:
        cfg_series(g, 3)
    assert info.value.trace == ["S"]


def test_hilbert_from_tor_of_a_square():
    x = Alphabet.uniform(["x"])
    table = full_tor_table(ObstructionSet([(0, 0)]), x, 5)
    h = hilbert_from_tor([from_counts(row, 5) for row in table.dims()])
    assert ints(h) == [1, 1, 0, 0, 0, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_example1_formula_equals_closed_form(n):
    bound = 20
    formula = hilbert_formula(n, 2 * n, 1, dyck_series(n, bound), bound)
    assert formula == hilbert_example_closed_form(1, n, bound)
    corrected = hilbert_formula(n, 2 * n, 1, dyck_series(n, bound), bound, corrected=True)
    assert corrected == hilbert_example_closed_form(1, n, bound, corrected=True)
    assert first_disagreement(formula, corrected) == 3


def test_example2_closed_forms():
    corrected = hilbert_example_closed_form(2, None, 3, corrected=True)
    assert ints(corrected) == [1, 17, 234, 3074]
    assert ints(hilbert_example_closed_form(2, None, 3)) == [1, 17, 234, 3042]
    h_l = cfg_series(preset_grammar("example2"), 8)
    assert hilbert_formula(2, 2, 1, h_l, 8, corrected=True) == hilbert_example_closed_form(2, None, 8, corrected=True)


def test_example3_formula_equals_closed_form():
    bound = 30
    h_l = cfg_series(preset_grammar("example3"), bound)
    assert hilbert_formula(2, 26, 3, h_l, bound) == hilbert_example_closed_form(3, None, bound)


def test_formula_input_checks():
    with pytest.raises(InvalidInputError):
        hilbert_formula(1, 2, 1, RatSeries.from_coeffs([2], 5), 5)
    with pytest.raises(InvalidInputError):
        hilbert_formula(1, 2, 1, dyck_series(1, 3), 5)


def test_tor3_remark_series():
    assert ints(tor3_remark_series(1, 1, dyck_series(1, 6), 6)) == [0, 0, 0, 0, 1, 0, 1]


def test_check_counting_series():
    assert check_counting_series(RatSeries.from_coeffs([1, 2], 1), "ok") == [1, 2]
    with pytest.raises(IntegralityError):
        check_counting_series(RatSeries.from_coeffs([1, -2], 1), "negative")
