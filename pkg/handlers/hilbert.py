"""hilbert: Hilbert series by normal words, chains, formulas or closed forms."""

from __future__ import annotations

import argparse
import logging

from commands import (
    CMD_HILBERT,
    HILBERT_METHODS,
    METHOD_CLOSEDFORM,
    METHOD_CORRECTED,
    METHOD_EULER,
    METHOD_FORMULA,
    METHOD_NORMALWORDS,
    VERDICT_AGREE,
    VERDICT_DISAGREE,
)
from config import settings
from handlers.common import (
    CommandResult,
    JobConfig,
    add_common_options,
    add_source_options,
    check_guard,
    job_from_args,
    provenance,
    resolve_presentation,
)
from handlers.gb import compute_gb
from services.chains import full_tor_table
from services.construction import PresentationSpec
from services.errors import EXIT_OK, EXIT_VERDICT_FAILED, InvalidInputError
from services.groebner import normal_word_counts
from services.langkit import image_language
from services.presets import example_id, preset_grammar
from services.series import (
    RatSeries,
    cfg_series,
    check_counting_series,
    first_disagreement,
    from_counts,
    hilbert_example_closed_form,
    hilbert_from_tor,
    hilbert_formula,
)
from services.serialization import make_document, series_to_json
from utils.formatters import fmt_series_table

logger = logging.getLogger(__name__)

_GB_METHODS = {METHOD_NORMALWORDS, METHOD_EULER}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(CMD_HILBERT, help="Hilbert series of a presentation")
    add_source_options(parser, input_help="presentation JSON written by construct")
    parser.add_argument("--degree", type=int, help="series bound N")
    parser.add_argument(
        "--method",
        action="append",
        choices=HILBERT_METHODS,
        help="repeat to run several methods (default: normalwords)",
    )
    parser.add_argument("--compare", action="store_true", help="report AGREE or the first differing degree")
    add_common_options(parser)
    parser.set_defaults(handler=run)


def language_series(spec: PresentationSpec, bound: int) -> RatSeries:
    """H_L from the preset's grammar, or from the enumerated image for plain parameters."""
    params = spec.params
    if spec.preset:
        return cfg_series(preset_grammar(spec.preset, params.n if spec.preset == "example1" else None), bound)
    return from_counts(image_language(params.h, bound).sizes(), bound)


def hilbert_by_method(spec: PresentationSpec, method: str, bound: int) -> RatSeries:
    if method == METHOD_NORMALWORDS:
        gb = compute_gb(spec, bound)
        return from_counts(normal_word_counts(gb.obstruction_set(), spec.alphabet, bound), bound)
    if method == METHOD_EULER:
        gb = compute_gb(spec, bound)
        table = full_tor_table(gb.obstruction_set(), spec.alphabet, bound)
        return hilbert_from_tor([from_counts(row, bound) for row in table.dims()])
    if spec.params is None:
        raise InvalidInputError(f"method {method!r} needs construction parameters (a preset or construct output)")
    p = spec.params
    if method in (METHOD_FORMULA, METHOD_CORRECTED):
        return hilbert_formula(p.n, p.m, p.d, language_series(spec, bound), bound, corrected=method == METHOD_CORRECTED)
    if method == METHOD_CLOSEDFORM:
        if not spec.preset:
            raise InvalidInputError("closedform is only defined for the presets")
        return hilbert_example_closed_form(example_id(spec.preset), p.n, bound)
    raise InvalidInputError(f"unknown method {method!r}")


def _guard(job: JobConfig, methods: list[str]) -> None:
    if _GB_METHODS.intersection(methods):
        check_guard(job, job.degree, settings.gb_max_degree, "Gröbner degree")
    check_guard(job, job.degree, settings.series_max_degree, "series degree")


def run(args: argparse.Namespace) -> CommandResult:
    methods = list(dict.fromkeys(args.method or [METHOD_NORMALWORDS]))
    default_degree = settings.default_gb_degree if _GB_METHODS.intersection(methods) else settings.default_series_degree
    job = job_from_args(args, CMD_HILBERT, default_degree)
    if args.compare and len(methods) < 2:
        raise InvalidInputError("--compare needs at least two --method options")
    _guard(job, methods)
    spec = resolve_presentation(job)

    results: dict[str, RatSeries] = {}
    for method in methods:
        series = hilbert_by_method(spec, method, job.degree)
        check_counting_series(series, f"Hilbert series ({method})")
        results[method] = series
        logger.info("hilbert %s: %s", method, [str(c) for c in series.coeffs[:6]])

    meta = provenance(job, methods=methods)
    exit_code = EXIT_OK
    lines = []
    if args.compare:
        reference = results[methods[0]]
        disagreements = {}
        for method in methods[1:]:
            k = first_disagreement(reference, results[method])
            if k is not None:
                disagreements[method] = k
        meta["verdict"] = VERDICT_AGREE if not disagreements else VERDICT_DISAGREE
        meta["reference"] = methods[0]
        meta["first_disagreement"] = disagreements
        if disagreements:
            exit_code = EXIT_VERDICT_FAILED
        lines.append(f"# {meta['verdict']}" + "".join(f" {m}@{k}" for m, k in sorted(disagreements.items())))

    document = make_document("hilbert", series={m: series_to_json(s) for m, s in results.items()}, meta=meta)
    for method, series in results.items():
        lines.append(fmt_series_table(series.coeffs, title=method))
    return CommandResult(job, document, "\n".join(lines), exit_code)
