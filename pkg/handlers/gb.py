"""gb: truncated Gröbner basis with a verdict against the predicted leads."""

from __future__ import annotations

import argparse
import logging

from commands import CMD_GB, VERDICT_MATCH, VERDICT_MISMATCH
from config import settings
from handlers.common import (
    CommandResult,
    add_common_options,
    add_source_options,
    check_guard,
    job_from_args,
    provenance,
    resolve_presentation,
)
from services.construction import PresentationSpec, construction_alphabet, predicted_gb_leads
from services.errors import EXIT_OK, EXIT_VERDICT_FAILED
from services.freealg import Word
from services.groebner import TruncatedGB, buchberger_truncated
from services.serialization import gb_to_json
from utils.formatters import fmt_word

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(CMD_GB, help="truncated Gröbner basis of a presentation")
    add_source_options(parser, input_help="presentation JSON written by construct")
    parser.add_argument("--degree", type=int, help="leading-monomial degree bound N")
    add_common_options(parser)
    parser.set_defaults(handler=run)


def compute_gb(spec: PresentationSpec, bound: int) -> TruncatedGB:
    return buchberger_truncated(spec.relations, spec.ordering, bound)


def lead_verdict(spec: PresentationSpec, gb: TruncatedGB) -> dict | None:
    """Compare computed leads with (i)-(iii) leads and x P_n y L e, by name."""
    if spec.params is None:
        return None
    predicted_alphabet = construction_alphabet(spec.params)

    def named(words: set[Word], alphabet) -> set[str]:
        return {fmt_word(alphabet.names_of(w)) for w in words}

    computed = named(gb.lead_set(), spec.alphabet)
    predicted = named(predicted_gb_leads(spec.params, gb.bound), predicted_alphabet)
    missing = sorted(predicted - computed)
    unexpected = sorted(computed - predicted)
    verdict = VERDICT_MATCH if not missing and not unexpected else VERDICT_MISMATCH
    return {"verdict": verdict, "missing": missing, "unexpected": unexpected, "predicted_count": len(predicted)}


def run(args: argparse.Namespace) -> CommandResult:
    job = job_from_args(args, CMD_GB, settings.default_gb_degree)
    check_guard(job, job.degree, settings.gb_max_degree, "Gröbner degree")
    spec = resolve_presentation(job)
    gb = compute_gb(spec, job.degree)
    verdict = lead_verdict(spec, gb)

    meta = provenance(job, lead_count=len(gb))
    if verdict is not None:
        meta.update(verdict)
    document = gb_to_json(gb, meta=meta)

    a = spec.alphabet
    lines = [f"# {len(gb)} basis elements up to degree {gb.bound}"]
    lines += [fmt_word(a.names_of(w)) for w in gb.leads()]
    exit_code = EXIT_OK
    if verdict is not None:
        lines.append(f"# {verdict['verdict']}")
        lines += [f"# missing: {w}" for w in verdict["missing"]]
        lines += [f"# unexpected: {w}" for w in verdict["unexpected"]]
        if verdict["verdict"] == VERDICT_MISMATCH:
            logger.warning("basis leads differ from the prediction: %d missing, %d unexpected", len(verdict["missing"]), len(verdict["unexpected"]))
            exit_code = EXIT_VERDICT_FAILED
    return CommandResult(job, document, "\n".join(lines), exit_code)
