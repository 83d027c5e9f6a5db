"""Named example configurations and the shipped grammar files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from services.construction import ConstructionParams, PresentationSpec, build_presentation, example1_params
from services.errors import InvalidInputError
from services.langkit import Grammar, Homomorphism, parse_grammar, parse_homomorphism

DATA_DIR = Path(__file__).resolve().parent.parent / "algebra_data"
GRAMMAR_DIR = DATA_DIR / "grammars"

PRESET_NAMES = ("example1", "example2", "example3")

_presets: dict | None = None


def load_presets() -> dict:
    global _presets
    if _presets is None:
        with open(DATA_DIR / "presets.json", encoding="utf-8") as f:
            _presets = json.load(f)
    return _presets


def load_json(path: str | Path) -> Any:
    """Read a user JSON file; every failure becomes InvalidInputError."""
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InvalidInputError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def load_grammar_file(path: str | Path) -> Grammar:
    return parse_grammar(load_json(path))


def shipped_grammar(name: str) -> Grammar:
    """A grammar from algebra_data/grammars by file name."""
    path = GRAMMAR_DIR / name
    if not path.is_file():
        raise InvalidInputError(f"no shipped grammar named {name!r}")
    return load_grammar_file(path)


def example_id(preset: str) -> int:
    if preset not in PRESET_NAMES:
        raise InvalidInputError(f"unknown preset {preset!r}; choose from {', '.join(PRESET_NAMES)}")
    return PRESET_NAMES.index(preset) + 1


def preset_params(preset: str, n: int | None = None) -> ConstructionParams:
    """Construction parameters of a preset; example1 takes n (default 1)."""
    example_id(preset)
    if preset == "example1":
        return example1_params(1 if n is None else n)
    if n is not None:
        raise InvalidInputError(f"preset {preset!r} has a fixed n")
    h: Homomorphism = parse_homomorphism(load_presets()[preset]["homomorphism"])
    return ConstructionParams(h.n, h)


def preset_presentation(preset: str, n: int | None = None) -> PresentationSpec:
    spec = build_presentation(preset_params(preset, n), preset=preset)
    return spec


def preset_grammar(preset: str, n: int | None = None) -> Grammar:
    """Unambiguous grammar for the preset's language L."""
    example_id(preset)
    if preset == "example1":
        return dyck_image_grammar(preset_params(preset, n).h)
    return shipped_grammar(load_presets()[preset]["grammar"])


def dyck_image_grammar(h: Homomorphism) -> Grammar:
    """S -> ε | phi(a.i) S phi(b.i) S; unambiguous when the images of the a.i are distinct letters."""
    productions: list[dict[str, Any]] = [{"lhs": "S", "rhs": []}]
    for i in range(1, h.n + 1):
        opening = h.target.names_of(h.image_of(f"a.{i}"))
        closing = h.target.names_of(h.image_of(f"b.{i}"))
        productions.append({"lhs": "S", "rhs": opening + ["S"] + closing + ["S"]})
    return parse_grammar({
        "nonterminals": ["S"],
        "start": "S",
        "productions": productions,
        "weights": {name: 1 for name in h.target.names},
    })
