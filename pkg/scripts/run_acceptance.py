"""Run the acceptance checks and print a verdict table.

Usage:
    uv run python scripts/run_acceptance.py
    uv run python scripts/run_acceptance.py --only A2,A5
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from services.chains import chain_language, full_tor_table, govorov_chain_language, tor_table
from services.construction import example1_params, predicted_gb_leads, predicted_tor_series
from services.freealg import Alphabet
from services.groebner import ObstructionSet, buchberger_truncated, normal_word_counts
from services.langkit import enumerate_dyck, image_language
from services.presets import preset_grammar, preset_params, preset_presentation
from services.series import (
    RatSeries,
    cfg_series,
    check_counting_series,
    dyck_series,
    first_disagreement,
    from_counts,
    hilbert_example_closed_form,
    hilbert_from_tor,
    hilbert_formula,
    series_invert,
    series_sqrt,
    series_substitute_power,
)
from utils.logging_setup import setup_logging

Check = Callable[[], tuple[bool, str]]


def _gb(preset: str, bound: int, n: int | None = None):
    spec = preset_presentation(preset, n)
    return spec, buchberger_truncated(spec.relations, spec.ordering, bound)


def check_gb_leads() -> tuple[bool, str]:
    details = []
    ok = True
    for preset, n, bound in (("example1", 1, 8), ("example1", 2, 6), ("example2", None, 5)):
        spec, gb = _gb(preset, bound, n)
        match = gb.lead_set() == predicted_gb_leads(spec.params, bound)
        ok &= match
        details.append(f"{preset}{'' if n is None else f'(n={n})'}@{bound}:{'ok' if match else 'MISMATCH'}")
    return ok, " ".join(details)


def check_example2_triple() -> tuple[bool, str]:
    bound = 6
    spec, gb = _gb("example2", bound)
    obs = gb.obstruction_set()
    normal = from_counts(normal_word_counts(obs, spec.alphabet, bound), bound)
    table = full_tor_table(obs, spec.alphabet, bound)
    euler = hilbert_from_tor([from_counts(row, bound) for row in table.dims()])
    p = spec.params
    h_l = cfg_series(preset_grammar("example2"), bound)
    corrected = hilbert_formula(p.n, p.m, p.d, h_l, bound, corrected=True)
    published = hilbert_formula(p.n, p.m, p.d, h_l, bound)
    ok = (
        normal == euler == corrected
        and normal.as_integers()[:3] == [1, 17, 234]
        and first_disagreement(normal, published) == 3 * p.d
    )
    return ok, f"normalwords={normal.as_integers()} published differs at {first_disagreement(normal, published)}"


def check_example1_closed_form() -> tuple[bool, str]:
    bound = 20
    for n in (1, 2, 3):
        formula = hilbert_formula(n, 2 * n, 1, dyck_series(n, bound), bound)
        closed = hilbert_example_closed_form(1, n, bound)
        k = first_disagreement(formula, closed)
        if k is not None:
            return False, f"n={n} differs at degree {k}"
    return True, "n=1,2,3 up to 20"


def check_example3_identities() -> tuple[bool, str]:
    bound = 24
    grammar = cfg_series(preset_grammar("example3"), bound)
    surd = series_substitute_power(dyck_series(2, bound), 3)
    enumerated = from_counts(image_language(preset_params("example3").h, bound).sizes(), bound)
    if not grammar == surd == enumerated:
        return False, "grammar, surd and enumeration disagree"
    bound = 30
    p = preset_params("example3")
    formula = hilbert_formula(p.n, p.m, p.d, cfg_series(preset_grammar("example3"), bound), bound)
    closed = hilbert_example_closed_form(3, None, bound)
    k = first_disagreement(formula, closed)
    return k is None, "H_L up to 24, H_A up to 30" if k is None else f"H_A differs at degree {k}"


def check_chain_enumerators() -> tuple[bool, str]:
    cases = [
        ("xx", ObstructionSet([(0, 0)]), Alphabet.uniform(["x"]), 6, 4),
        ("ab", ObstructionSet([(0, 1)]), Alphabet.uniform(["a", "b"]), 6, 4),
    ]
    spec, gb = _gb("example1", 5, 1)
    cases.append(("example1", gb.obstruction_set(), spec.alphabet, 5, 3))
    for label, obs, alphabet, bound, max_t in cases:
        for t in range(1, max_t + 1):
            fast = chain_language(obs, alphabet, t, bound).word_set()
            slow = govorov_chain_language(obs, alphabet, t, bound).word_set()
            if fast != slow:
                return False, f"{label}: L_{t} differs"
    return True, "xx, ab, example1 n=1"


def check_tor_dimensions() -> tuple[bool, str]:
    bound = 5
    spec, gb = _gb("example1", bound, 1)
    table = tor_table(gb.obstruction_set(), spec.alphabet, 2, bound)
    predicted = predicted_tor_series(spec.params, dyck_series(1, bound), bound, corrected=True)
    for t, row in enumerate(table.dims()):
        k = first_disagreement(from_counts(row, bound), predicted[t])
        if k is not None:
            return False, f"Tor_{t + 1} differs at degree {k}"
    spec6, gb6 = _gb("example1", 6, 1)
    l3 = chain_language(gb6.obstruction_set(), spec6.alphabet, 3, 6)
    return not len(l3), "t=0..2 up to 5, L_3 empty up to 6" if not len(l3) else f"L_3 has {len(l3)} words"


def check_euler_identity() -> tuple[bool, str]:
    details = []
    for preset, bound in (("example1", 8), ("example2", 5)):
        spec, gb = _gb(preset, bound)
        obs = gb.obstruction_set()
        h_a = from_counts(normal_word_counts(obs, spec.alphabet, bound), bound)
        euler = RatSeries.one(bound)
        for t, row in enumerate(full_tor_table(obs, spec.alphabet, bound).dims()):
            euler = euler - from_counts(row, bound) if t % 2 == 0 else euler + from_counts(row, bound)
        if h_a * euler != RatSeries.one(bound):
            return False, f"{preset}: product is not 1"
        details.append(f"{preset}@{bound}")
    return True, " ".join(details)


def check_series_kernel() -> tuple[bool, str]:
    if dyck_series(1, 12) != from_counts(enumerate_dyck(1, 12).sizes(), 12):
        return False, "Catalan numbers differ"
    bound = 30
    for n in (1, 2, 3):
        h = dyck_series(n, bound)
        rhs = RatSeries.one(bound) + (RatSeries.monomial(2, n, bound) * h * h)
        if h != rhs:
            return False, f"Dyck equation fails for n={n}"
    rng = random.Random(20240617)
    for _ in range(100):
        size = rng.randint(1, 12)
        a = RatSeries.from_coeffs(
            [1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)], size
        )
        if series_invert(series_invert(a)) != a or series_sqrt(a) * series_sqrt(a) != a:
            return False, f"round trip fails on {a!r}"
    return True, "Catalan, functional equation, 100 round trips"


def check_counting_series_all() -> tuple[bool, str]:
    bound = 6
    spec, gb = _gb("example2", bound)
    obs = gb.obstruction_set()
    series = [from_counts(normal_word_counts(obs, spec.alphabet, bound), bound)]
    series += [from_counts(row, bound) for row in full_tor_table(obs, spec.alphabet, bound).dims()]
    for p_name, n in (("example1", 1), ("example1", 2)):
        p = preset_params(p_name, n)
        series += predicted_tor_series(p, dyck_series(n, 20), 20, corrected=True)
        series.append(hilbert_example_closed_form(1, n, 20, corrected=True))
    for s in series:
        check_counting_series(s, "acceptance series")
    return True, f"{len(series)} series"


CHECKS: list[tuple[str, str, Check]] = [
    ("A1", "basis leads match the prediction", check_gb_leads),
    ("A2", "example2 Hilbert methods agree", check_example2_triple),
    ("A3", "example1 formula equals closed form", check_example1_closed_form),
    ("A4", "example3 series identities", check_example3_identities),
    ("A5", "chain enumerators agree", check_chain_enumerators),
    ("A6", "Tor dimensions and global dimension", check_tor_dimensions),
    ("A7", "Euler identity", check_euler_identity),
    ("A8", "series kernel", check_series_kernel),
    ("A9", "counting series are nonnegative integers", check_counting_series_all),
]


def main() -> int:
    parser = argparse.ArgumentParser(description="algser acceptance checks")
    parser.add_argument("--only", help="comma-separated check codes, e.g. A2,A5")
    args = parser.parse_args()
    setup_logging("acceptance")

    wanted = set(args.only.split(",")) if args.only else None
    failures = 0
    print(f"{'code':<5} {'verdict':<8} {'seconds':>8}  detail")
    for code, title, check in CHECKS:
        if wanted and code not in wanted:
            continue
        started = time.perf_counter()
        try:
            ok, detail = check()
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - started
        failures += not ok
        print(f"{code:<5} {'PASS' if ok else 'FAIL':<8} {elapsed:>8.1f}  {title}: {detail}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
