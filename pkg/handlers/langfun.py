"""langfun: generating function of a grammar, optionally checked by enumeration."""

from __future__ import annotations

import argparse
import logging

from commands import CMD_LANGFUN, VERDICT_AGREE, VERDICT_DISAGREE
from config import settings
from handlers.common import CommandResult, add_common_options, check_guard, job_from_args, provenance
from services.errors import EXIT_OK, EXIT_VERDICT_FAILED, InvalidInputError
from services.langkit import Grammar, grammar_language
from services.presets import load_grammar_file, shipped_grammar
from services.series import cfg_series, first_disagreement, from_counts
from services.serialization import make_document, series_to_json
from utils.formatters import fmt_series_table

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(CMD_LANGFUN, help="generating function of a context-free grammar")
    parser.add_argument("--grammar", help="grammar JSON file")
    parser.add_argument("--shipped", help="name of a grammar under algebra_data/grammars")
    parser.add_argument("--degree", type=int, help="series bound N")
    parser.add_argument("--enumerate", dest="enumerate_to", type=int, metavar="M", help="cross-check degrees 0..M by enumeration")
    add_common_options(parser)
    parser.set_defaults(handler=run)


def _grammar(args: argparse.Namespace) -> tuple[Grammar, str]:
    if args.grammar and args.shipped:
        raise InvalidInputError("give either --grammar or --shipped, not both")
    if args.grammar:
        return load_grammar_file(args.grammar), args.grammar
    if args.shipped:
        return shipped_grammar(args.shipped), args.shipped
    raise InvalidInputError("langfun needs --grammar or --shipped")


def run(args: argparse.Namespace) -> CommandResult:
    job = job_from_args(args, CMD_LANGFUN, settings.default_series_degree)
    check_guard(job, job.degree, settings.series_max_degree, "series degree")
    g, source = _grammar(args)
    job.inputs = [source]
    series = cfg_series(g, job.degree)

    meta = provenance(job, start=g.start, nonterminals=len(g.nonterminals))
    lines = []
    exit_code = EXIT_OK
    if args.enumerate_to is not None:
        m = args.enumerate_to
        if m < 0:
            raise InvalidInputError("--enumerate needs a nonnegative degree")
        check_guard(job, m, settings.langfun_enumerate_max_degree, "enumeration degree")
        counted = from_counts(grammar_language(g, m).sizes(), m)
        k = first_disagreement(series, counted)
        meta["enumerated_to"] = m
        meta["verdict"] = VERDICT_AGREE if k is None else VERDICT_DISAGREE
        if k is not None:
            meta["first_disagreement"] = k
            logger.warning("grammar series and enumeration differ at degree %d", k)
            exit_code = EXIT_VERDICT_FAILED
        lines.append(f"# {meta['verdict']}" + (f" at degree {k}" if k is not None else ""))

    document = make_document("langfun", series=series_to_json(series), meta=meta)
    lines.append(fmt_series_table(series.coeffs, title=f"H_L({g.start})"))
    return CommandResult(job, document, "\n".join(lines), exit_code)
