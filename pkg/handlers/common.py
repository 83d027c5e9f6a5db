"""Shared handler plumbing: job options, input resolution, guards, output."""

from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from commands import FORMAT_JSON, FORMAT_TEXT
from config import settings
from services.construction import PresentationSpec
from services.errors import EXIT_OK, InvalidInputError, ensure_within_guard
from services.presets import PRESET_NAMES, load_json, preset_presentation
from services.serialization import dumps, presentation_from_json
from utils.validators import validate_degree_bound

logger = logging.getLogger(__name__)


@dataclass
class JobConfig:
    """One CLI invocation after argument parsing."""

    command: str
    degree: int
    fmt: str = FORMAT_JSON
    preset: str | None = None
    n: int | None = None
    inputs: list[str] = field(default_factory=list)
    out: str | None = None
    force: bool = False


@dataclass
class CommandResult:
    job: JobConfig
    document: dict[str, Any]
    text: str
    exit_code: int = EXIT_OK


def add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="fmt", choices=(FORMAT_JSON, FORMAT_TEXT), default=FORMAT_JSON)
    parser.add_argument("--out", help="write the result here instead of stdout")
    parser.add_argument("--force", action="store_true", help="ignore the configured size guards")


def add_source_options(parser: argparse.ArgumentParser, *, input_help: str) -> None:
    parser.add_argument("--preset", help=f"one of {', '.join(PRESET_NAMES)}")
    parser.add_argument("--n", type=int, help="bracket kinds for example1")
    parser.add_argument("--input", dest="input_path", help=input_help)


def job_from_args(args: argparse.Namespace, command: str, default_degree: int) -> JobConfig:
    degree = default_degree if getattr(args, "degree", None) is None else args.degree
    err = validate_degree_bound(degree)
    if err:
        raise InvalidInputError(err)
    inputs = [p for p in (getattr(args, "input_path", None),) if p]
    return JobConfig(
        command=command,
        degree=degree,
        fmt=args.fmt,
        preset=getattr(args, "preset", None),
        n=getattr(args, "n", None),
        inputs=inputs,
        out=args.out,
        force=args.force or settings.guards_disabled,
    )


def check_guard(job: JobConfig, value: int, limit: int, what: str) -> None:
    ensure_within_guard(value, limit, what, force=job.force)
    if value > limit:
        logger.warning("%s %d exceeds the guard %d, forced", what, value, limit)


def resolve_presentation(job: JobConfig) -> PresentationSpec:
    """Preset or presentation file, exactly one of them."""
    if job.preset and job.inputs:
        raise InvalidInputError("give either --preset or --input, not both")
    if job.preset:
        return preset_presentation(job.preset, job.n)
    if job.inputs:
        if job.n is not None:
            raise InvalidInputError("--n only applies to presets")
        return presentation_from_json(load_json(job.inputs[0]))
    raise InvalidInputError("a --preset or an --input presentation is required")


def provenance(job: JobConfig, **extra: Any) -> dict[str, Any]:
    meta: dict[str, Any] = {"command": job.command, "degree": job.degree}
    if job.preset:
        meta["preset"] = job.preset
    if job.n is not None:
        meta["n"] = job.n
    if job.inputs:
        meta["inputs"] = list(job.inputs)
    meta.update(extra)
    return meta


def emit(result: CommandResult) -> None:
    """Write the result to --out or stdout in the requested format."""
    job = result.job
    payload = dumps(result.document) if job.fmt == FORMAT_JSON else result.text.rstrip("\n") + "\n"
    if job.out:
        Path(job.out).write_text(payload, encoding="utf-8")
        logger.info("wrote %s", job.out)
    else:
        print(payload, end="")
