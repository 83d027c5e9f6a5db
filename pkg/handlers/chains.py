"""chains: chain languages L_0..L_max_t and Tor dimensions."""

from __future__ import annotations

import argparse
import logging

from commands import CMD_CHAINS, VERDICT_MATCH, VERDICT_MISMATCH
from config import settings
from handlers.common import (
    CommandResult,
    add_common_options,
    add_source_options,
    check_guard,
    job_from_args,
    provenance,
)
from handlers.gb import compute_gb
from services.chains import compare_dims, tor_table
from services.construction import PresentationSpec, predicted_chain_words
from services.errors import EXIT_OK, EXIT_VERDICT_FAILED, InvalidInputError
from services.freealg import Alphabet
from services.groebner import ObstructionSet
from services.presets import load_json, preset_presentation
from services.serialization import chain_table_to_json, obstructions_from_json, presentation_from_json

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(CMD_CHAINS, help="chain languages and Tor dimensions")
    add_source_options(parser, input_help="presentation, gb or obstructions JSON")
    parser.add_argument("--degree", type=int, help="degree bound N")
    parser.add_argument("--max-t", dest="max_t", type=int, help="largest chain index")
    parser.add_argument("--oracle", action="store_true", help="brute-force set formulas (small inputs only)")
    parser.add_argument("--dims-only", dest="dims_only", action="store_true", help="omit the chain words")
    parser.add_argument("--predict", action="store_true", help="compare with the predicted chains of a preset")
    add_common_options(parser)
    parser.set_defaults(handler=run)


def _obstructions(job, bound: int) -> tuple[ObstructionSet, Alphabet, PresentationSpec | None]:
    if job.preset and job.inputs:
        raise InvalidInputError("give either --preset or --input, not both")
    if job.preset:
        spec = preset_presentation(job.preset, job.n)
    elif job.inputs:
        data = load_json(job.inputs[0])
        if isinstance(data, dict) and data.get("kind") == "presentation":
            spec = presentation_from_json(data)
        else:
            obs, alphabet = obstructions_from_json(data)
            return obs, alphabet, None
    else:
        raise InvalidInputError("a --preset or an --input file is required")
    check_guard(job, bound, settings.gb_max_degree, "Gröbner degree")
    gb = compute_gb(spec, bound)
    return gb.obstruction_set(), spec.alphabet, spec


def run(args: argparse.Namespace) -> CommandResult:
    job = job_from_args(args, CMD_CHAINS, settings.default_chain_degree)
    max_t = settings.default_chain_max_t if args.max_t is None else args.max_t
    obs, alphabet, spec = _obstructions(job, job.degree)
    table = tor_table(obs, alphabet, max_t, job.degree, oracle=args.oracle, force=job.force)

    meta = provenance(job, max_t=max_t, enumerator="oracle" if args.oracle else "overlap")
    exit_code = EXIT_OK
    if args.predict:
        if spec is None or spec.params is None:
            raise InvalidInputError("--predict needs a preset or a constructed presentation")
        predicted = [predicted_chain_words(spec.params, t, job.degree).sizes() for t in range(max_t + 1)]
        diff = compare_dims(table, predicted)
        meta["predicted_dims"] = predicted
        meta["verdict"] = VERDICT_MATCH if diff is None else VERDICT_MISMATCH
        if diff is not None:
            meta["first_difference"] = {"t": diff[0], "degree": diff[1]}
            logger.warning("chain dimensions differ from the prediction at t=%d, degree %d", *diff)
            exit_code = EXIT_VERDICT_FAILED

    document = chain_table_to_json(table, with_words=not args.dims_only, meta=meta)
    lines = [f"# dim Tor_(t+1) by degree 0..{job.degree}"]
    for t, row in enumerate(table.dims()):
        lines.append(f"L_{t}: " + " ".join(str(c) for c in row))
    if "verdict" in meta:
        lines.append(f"# {meta['verdict']}")
    return CommandResult(job, document, "\n".join(lines), exit_code)
