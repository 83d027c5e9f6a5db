from __future__ import annotations

import random

import pytest

from services.construction import PresentationSpec
from services.freealg import Alphabet, OrderSpec
from services.groebner import TruncatedGB, buchberger_truncated
from services.presets import preset_presentation


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)


@pytest.fixture
def abc() -> Alphabet:
    return Alphabet.uniform(["a", "b", "c"])


@pytest.fixture
def abc_order(abc: Alphabet) -> OrderSpec:
    return OrderSpec(abc)


@pytest.fixture(scope="session")
def example1() -> PresentationSpec:
    return preset_presentation("example1", 1)


@pytest.fixture(scope="session")
def example2() -> PresentationSpec:
    return preset_presentation("example2")


@pytest.fixture(scope="session")
def example1_gb5(example1: PresentationSpec) -> TruncatedGB:
    return buchberger_truncated(example1.relations, example1.ordering, 5)


def names(alphabet: Alphabet, words) -> set[str]:
    return {" ".join(alphabet.names_of(w)) for w in words}
