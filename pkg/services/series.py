"""Exact truncated power series and the Hilbert-series formulas built on them.

Multiplication, inversion and square roots run on sympy's sparse ring
series over QQ; :class:`RatSeries` is the immutable Fraction view that the
rest of the package passes around.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_nth_root, rs_series_inversion, rs_trunc
from sympy.polys.rings import ring

from config import settings
from services.errors import (
    FixedPointError,
    IntegralityError,
    InternalError,
    InvalidInputError,
    NotInvertibleError,
    NumericError,
)
from services.langkit import Grammar

logger = logging.getLogger(__name__)

_RING, _Z = ring("z", QQ)


@dataclass(frozen=True, eq=False)
class RatSeries:
    """c_0 + c_1 z + ... + c_N z^N with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInputError("a series keeps at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction | int], bound: int) -> RatSeries:
        """Pad with zeros or truncate to exactly bound + 1 coefficients."""
        if bound < 0:
            raise InvalidInputError("series bound must be nonnegative")
        values = [Fraction(c) for c in coeffs][: bound + 1]
        values.extend([Fraction(0)] * (bound + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def zero(cls, bound: int) -> RatSeries:
        return cls.from_coeffs([], bound)

    @classmethod
    def one(cls, bound: int) -> RatSeries:
        return cls.from_coeffs([1], bound)

    @classmethod
    def monomial(cls, k: int, coeff: Fraction | int, bound: int) -> RatSeries:
        """coeff * z^k (zero when k > bound)."""
        values = [Fraction(0)] * (bound + 1)
        if k <= bound:
            values[k] = Fraction(coeff)
        return cls.from_coeffs(values, bound)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.bound else Fraction(0)

    def truncate(self, bound: int) -> RatSeries:
        if bound > self.bound:
            raise InvalidInputError(f"cannot extend a series known to degree {self.bound} up to {bound}")
        return RatSeries(self.coeffs[: bound + 1])

    def as_integers(self) -> list[int]:
        """Coefficients as ints; raises IntegralityError on a fraction."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise IntegralityError(f"coefficient {c} at degree {k} is not an integer")
            out.append(c.numerator)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatSeries):
            return NotImplemented
        common = min(self.bound, other.bound)
        return self.coeffs[: common + 1] == other.coeffs[: common + 1]

    __hash__ = None  # equality is up to the common bound

    def __repr__(self) -> str:
        return f"RatSeries({[str(c) for c in self.coeffs]})"

    def __add__(self, other: RatSeries) -> RatSeries:
        return series_add(self, other)

    def __sub__(self, other: RatSeries) -> RatSeries:
        return series_add(self, series_neg(other))

    def __neg__(self) -> RatSeries:
        return series_neg(self)

    def __mul__(self, other: RatSeries | Fraction | int) -> RatSeries:
        if isinstance(other, RatSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: Fraction | int) -> RatSeries:
        factor = Fraction(factor)
        return RatSeries(tuple(c * factor for c in self.coeffs))


# ---------------------------------------------------------------------------
# sympy bridge
# ---------------------------------------------------------------------------

def _to_ring(s: RatSeries):
    return _RING.from_dict({(k,): QQ(c.numerator, c.denominator) for k, c in enumerate(s.coeffs) if c})


def _from_ring(p, bound: int) -> RatSeries:
    values = [Fraction(0)] * (bound + 1)
    for (k,), c in p.items():
        if 0 <= k <= bound:
            values[k] = Fraction(int(c.numerator), int(c.denominator))
    return RatSeries(tuple(values))


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def series_add(a: RatSeries, b: RatSeries) -> RatSeries:
    bound = min(a.bound, b.bound)
    return RatSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(bound + 1)))


def series_neg(a: RatSeries) -> RatSeries:
    return RatSeries(tuple(-c for c in a.coeffs))


def series_mul(a: RatSeries, b: RatSeries) -> RatSeries:
    bound = min(a.bound, b.bound)
    return _from_ring(rs_mul(_to_ring(a), _to_ring(b), _Z, bound + 1), bound)


def series_invert(a: RatSeries) -> RatSeries:
    """1/a up to a's bound; the constant term must be nonzero."""
    if not a.coeffs[0]:
        raise NotInvertibleError("series with zero constant term is not invertible")
    return _from_ring(rs_series_inversion(_to_ring(a), _Z, a.bound + 1), a.bound)


def series_sqrt(a: RatSeries) -> RatSeries:
    """The square root with constant term 1 (Newton iteration)."""
    if a.coeffs[0] != 1:
        raise NumericError("square root needs constant term 1")
    return _from_ring(rs_nth_root(_to_ring(a), 2, _Z, a.bound + 1), a.bound)


def series_substitute_power(a: RatSeries, d: int) -> RatSeries:
    """a(z^d) with the same bound."""
    if d < 1:
        raise InvalidInputError("substitution power must be at least 1")
    values = [Fraction(0)] * (a.bound + 1)
    for k, c in enumerate(a.coeffs):
        if k * d > a.bound:
            break
        values[k * d] = c
    return RatSeries(tuple(values))


def series_shift_down(a: RatSeries, k: int) -> RatSeries:
    """a / z^k; the first k coefficients must vanish exactly."""
    if k > a.bound:
        raise InvalidInputError(f"cannot divide a degree-{a.bound} series by z^{k}")
    for j in range(k):
        if a.coeffs[j]:
            raise InternalError(f"removable singularity check failed: coefficient {j} is {a.coeffs[j]}")
    return RatSeries(a.coeffs[k:])


def series_shift_up(a: RatSeries, k: int) -> RatSeries:
    """z^k * a with the same bound."""
    return RatSeries.from_coeffs([0] * k + list(a.coeffs), a.bound)


def first_disagreement(a: RatSeries, b: RatSeries) -> int | None:
    """Lowest degree where the two series differ, up to the common bound."""
    for k in range(min(a.bound, b.bound) + 1):
        if a.coeffs[k] != b.coeffs[k]:
            return k
    return None


def check_counting_series(s: RatSeries, what: str) -> list[int]:
    """Coefficients of a series that counts words: nonnegative integers."""
    values = s.as_integers()
    for k, c in enumerate(values):
        if c < 0:
            raise IntegralityError(f"{what} has negative coefficient {c} at degree {k}")
    return values


def from_counts(counts: Sequence[int], bound: int | None = None) -> RatSeries:
    return RatSeries.from_coeffs(counts, len(counts) - 1 if bound is None else bound)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _sqrt_one_minus(c: int, power: int, bound: int) -> RatSeries:
    """sqrt(1 - c z^power)."""
    return series_sqrt(RatSeries.one(bound) - RatSeries.monomial(power, c, bound))


def dyck_series(n: int, bound: int) -> RatSeries:
    """(1 - sqrt(1 - 4n z^2)) / (2n z^2)."""
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    if bound < 0:
        raise InvalidInputError("series bound must be nonnegative")
    root = _sqrt_one_minus(4 * n, 2, bound + 2)
    numerator = RatSeries.one(bound + 2) - root
    return series_shift_down(numerator, 2).scale(Fraction(1, 2 * n))


def central_binomial_series(bound: int) -> RatSeries:
    """sum binom(2k, k) z^{2k} = 1 / sqrt(1 - 4 z^2)."""
    return series_invert(_sqrt_one_minus(4, 2, bound))


def pn_series(n: int, bound: int) -> RatSeries:
    """1 / (1 - z H_{D_n}(z))."""
    zd = series_shift_up(dyck_series(n, bound), 1)
    return series_invert(RatSeries.one(bound) - zd)


def pn_surd_series(n: int, bound: int) -> RatSeries:
    """2nz / (2nz - 1 + sqrt(1 - 4n z^2)), singularity at 0 cleared."""
    top = bound + 1
    denominator = (
        RatSeries.monomial(1, 2 * n, top)
        - RatSeries.one(top)
        + _sqrt_one_minus(4 * n, 2, top)
    )
    reduced = series_shift_down(denominator, 1)
    return series_invert(reduced).scale(2 * n)


def dyck_pn_product_closed_form(n: int, bound: int) -> RatSeries:
    """(1 - 2z - sqrt(1 - 4n z^2)) / (2z (nz + z - 1)) = H_{P_n} H_{D_n}."""
    top = bound + 1
    numerator = RatSeries.one(top) - RatSeries.monomial(1, 2, top) - _sqrt_one_minus(4 * n, 2, top)
    numerator = series_shift_down(numerator, 1)
    denominator = RatSeries.monomial(1, 2 * (n + 1), bound) - RatSeries.monomial(0, 2, bound)
    return numerator * series_invert(denominator)


# ---------------------------------------------------------------------------
# Grammars
# ---------------------------------------------------------------------------

def cfg_series(g: Grammar, bound: int) -> RatSeries:
    """Start-symbol series of the fixed point of the grammar's polynomial system.

    Iterates F <- Phi(F) from the zero tuple until no coordinate changes.
    The round budget is N + 2, times the number of nonterminals when
    ``cfg_rounds_per_nonterminal`` is set.
    """
    if bound < 0:
        raise InvalidInputError("series bound must be nonnegative")
    prec = bound + 1
    weights = dict(zip(g.terminals.names, g.terminals.weights))
    rounds = bound + 2
    if settings.cfg_rounds_per_nonterminal:
        rounds *= len(g.nonterminals)

    def phi(current: dict[str, object]) -> dict[str, object]:
        result = {name: _RING.zero for name in g.nonterminals}
        for lhs, rhs in g.productions:
            term = _RING.one
            for symbol in rhs:
                if symbol in weights:
                    term = rs_trunc(term * _Z ** weights[symbol], _Z, prec)
                else:
                    term = rs_mul(term, current[symbol], _Z, prec)
                if not term:
                    break
            result[lhs] = result[lhs] + term
        return result

    values = {name: _RING.zero for name in g.nonterminals}
    changing: list[str] = []
    for step in range(1, rounds + 1):
        updated = phi(values)
        changing = [name for name in g.nonterminals if updated[name] != values[name]]
        values = updated
        if not changing:
            logger.debug("grammar fixed point after %d rounds", step)
            break
    else:
        raise FixedPointError(
            f"grammar not proper for fixed-point evaluation: no fixed point within {rounds} rounds",
            trace=changing,
        )
    if any(phi(values)[name] != values[name] for name in g.nonterminals):
        raise InternalError("fixed point verification failed")
    return _from_ring(values[g.start], bound)


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def hilbert_from_tor(tor_series: Sequence[RatSeries]) -> RatSeries:
    """(1 - sum_i (-1)^i H_{L_i})^{-1}."""
    if not tor_series:
        raise InvalidInputError("at least one chain series is required")
    bound = min(s.bound for s in tor_series)
    total = RatSeries.one(bound)
    for i, s in enumerate(tor_series):
        total = total - s if i % 2 == 0 else total + s
    return series_invert(total)


def _construction_tail(n: int, d: int, h_l: RatSeries, bound: int) -> RatSeries:
    """z^{3d} (1 - (n+1) z^d) H_{P_n}(z^d) H_L(z)."""
    h_p = series_substitute_power(pn_series(n, bound), d)
    factor = RatSeries.one(bound) - RatSeries.monomial(d, n + 1, bound)
    return series_shift_up(factor * h_p * h_l.truncate(bound), 3 * d)


def hilbert_formula(
    n: int,
    m: int,
    d: int,
    h_l: RatSeries,
    bound: int,
    *,
    corrected: bool = False,
) -> RatSeries:
    """Inverse of 1 - mz - (2n^2+2n+3) z^d + (4n^3+4n^2+3n+1) z^{2d} + tail.

    ``corrected`` also subtracts the 4n^3 z^{3d} overlap chains.
    """
    if h_l.coeffs[0] != 1:
        raise InvalidInputError("H_L must have constant term 1")
    if h_l.bound < bound:
        raise InvalidInputError(f"H_L is known to degree {h_l.bound}, {bound} is needed")
    denominator = (
        RatSeries.one(bound)
        - RatSeries.monomial(1, m, bound)
        - RatSeries.monomial(d, 2 * n * n + 2 * n + 3, bound)
        + RatSeries.monomial(2 * d, 4 * n**3 + 4 * n * n + 3 * n + 1, bound)
        + _construction_tail(n, d, h_l, bound)
    )
    if corrected:
        denominator = denominator - RatSeries.monomial(3 * d, 4 * n**3, bound)
    return series_invert(denominator)


def hilbert_example_closed_form(
    example_id: int,
    n: int | None,
    bound: int,
    *,
    corrected: bool = False,
) -> RatSeries:
    """The explicit surd expressions of the three worked examples."""
    half = Fraction(1, 2)
    if example_id == 1:
        if n is None or n < 1:
            raise InvalidInputError("example 1 needs n >= 1")
        d, kinds = 1, n
        denominator = (
            RatSeries.one(bound)
            - RatSeries.monomial(1, 2 * n * n + 4 * n + 3, bound)
            + RatSeries.monomial(2, Fraction(4 * n**3 + 4 * n * n + 3 * n) + half, bound)
            + RatSeries.monomial(3, 1, bound)
            + series_shift_up(_sqrt_one_minus(4 * n, 2, bound), 2).scale(half)
        )
    elif example_id == 2:
        d, kinds = 1, 2
        h_l = central_binomial_series(bound)
        tail = series_shift_up(
            (RatSeries.one(bound) - RatSeries.monomial(1, 3, bound)) * pn_series(2, bound) * h_l, 3
        )
        denominator = (
            RatSeries.one(bound)
            - RatSeries.monomial(1, 17, bound)
            + RatSeries.monomial(2, 55, bound)
            + tail
        )
    elif example_id == 3:
        d, kinds = 3, 2
        denominator = (
            RatSeries.one(bound)
            - RatSeries.monomial(1, 26, bound)
            - RatSeries.monomial(3, 15, bound)
            + RatSeries.monomial(6, Fraction(109, 2), bound)
            + RatSeries.monomial(9, 1, bound)
            + series_shift_up(_sqrt_one_minus(8, 6, bound), 6).scale(half)
        )
    else:
        raise InvalidInputError(f"unknown example {example_id}")
    if corrected:
        denominator = denominator - RatSeries.monomial(3 * d, 4 * kinds**3, bound)
    return series_invert(denominator)


def tor3_remark_series(n: int, d: int, h_l: RatSeries, bound: int) -> RatSeries:
    """z^{3d} - z^{3d} (1 - (n+1) z^d) H_{P_n}(z^d) H_L(z)."""
    result = RatSeries.monomial(3 * d, 1, bound) - _construction_tail(n, d, h_l, bound)
    negative = [k for k, c in enumerate(result.coeffs) if c < 0]
    if negative:
        logger.warning("remark series has negative coefficients at degrees %s", negative)
    return result
