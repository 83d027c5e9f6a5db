"""construct: emit the presentation of a preset or a parameter file."""

from __future__ import annotations

import argparse
import logging

from commands import CMD_CONSTRUCT
from handlers.common import CommandResult, JobConfig, add_common_options, provenance
from services.construction import ConstructionParams, build_presentation, is_homogeneous
from services.errors import InvalidInputError
from services.freealg import leading_monomial
from services.langkit import parse_homomorphism
from services.presets import load_json, preset_presentation
from services.serialization import presentation_to_json
from utils.formatters import fmt_rational, fmt_word

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(CMD_CONSTRUCT, help="build the presentation A(n, phi)")
    parser.add_argument("--preset", help="example1, example2 or example3")
    parser.add_argument("--n", type=int, help="bracket kinds for example1")
    parser.add_argument("--params", help='JSON file {"n": ..., "homomorphism": {...}}')
    add_common_options(parser)
    parser.set_defaults(handler=run)


def _params_from_file(path: str) -> ConstructionParams:
    data = load_json(path)
    if not isinstance(data, dict):
        raise InvalidInputError("params file must hold a JSON object")
    description = data.get("homomorphism", data)
    h = parse_homomorphism(description)
    return ConstructionParams(data.get("n", h.n), h)


def run(args: argparse.Namespace) -> CommandResult:
    job = JobConfig(command=CMD_CONSTRUCT, degree=0, fmt=args.fmt, preset=args.preset, n=args.n, out=args.out, force=args.force)
    if args.preset and args.params:
        raise InvalidInputError("give either --preset or --params, not both")
    if args.preset:
        spec = preset_presentation(args.preset, args.n)
    elif args.params:
        job.inputs = [args.params]
        spec = build_presentation(_params_from_file(args.params))
    else:
        raise InvalidInputError("construct needs --preset or --params")

    document = presentation_to_json(spec)
    meta = provenance(job, homogeneous=is_homogeneous(spec))
    meta.pop("degree")
    document["meta"] = meta
    lines = [f"# {len(spec.alphabet)} generators, {len(spec.relations)} relations"]
    o = spec.ordering
    for f in spec.sorted_relations():
        lead = leading_monomial(f, o)
        terms = " ".join(f"{'+' if c > 0 else '-'} {fmt_rational(abs(c))}*{fmt_word(spec.alphabet.names_of(w))}" for w, c in f.sorted_terms(o))
        lines.append(f"{fmt_word(spec.alphabet.names_of(lead))}: {terms}")
    logger.info("constructed %d relations over %d generators", len(spec.relations), len(spec.alphabet))
    return CommandResult(job, document, "\n".join(lines))
