"""Command-line entrypoint: algser {construct,gb,chains,hilbert,langfun}."""

from __future__ import annotations

import argparse
import logging
import sys

from services.errors import EXIT_USAGE, AlgserError, FixedPointError
from utils.logging_setup import setup_logging

logger = logging.getLogger(__name__)


def _register_commands(subparsers: argparse._SubParsersAction) -> None:
    from handlers.chains import register as register_chains
    from handlers.construct import register as register_construct
    from handlers.gb import register as register_gb
    from handlers.hilbert import register as register_hilbert
    from handlers.langfun import register as register_langfun

    register_construct(subparsers)
    register_gb(subparsers)
    register_chains(subparsers)
    register_hilbert(subparsers)
    register_langfun(subparsers)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algser",
        description="Gröbner bases, chain languages and Hilbert series of graded algebras",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    _register_commands(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    setup_logging("algser")
    from handlers.common import emit

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # 0 on --help
        return 0 if not exc.code else EXIT_USAGE

    try:
        result = args.handler(args)
    except FixedPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.trace:
            print(f"still changing: {', '.join(exc.trace)}", file=sys.stderr)
        return exc.exit_code
    except AlgserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        logger.debug("command failed", exc_info=exc)
        return exc.exit_code

    emit(result)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
