"""hexlap command-line application."""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .commands import gen, invariants, sizes, spectrum, transform, validate
from .config import get_settings
from .errors import EXIT_INPUT, HexlapError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexlap",
        description="Spectra and random-walk invariants of iterated hexagonal graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress at INFO level")
    parser.add_argument("--debug", action="store_true", help="Log at DEBUG level")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (gen, transform, sizes, spectrum, invariants, validate):
        command.register(subparsers)
    return parser


def configure_logging(args: argparse.Namespace) -> None:
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else 0
    configure_logging(args)

    try:
        return int(args.func(args))
    except HexlapError as e:
        logger.debug(f"{type(e).__name__}: {e.detail}")
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code
    except ValidationError as e:
        logger.debug(f"Invalid parameters: {e}")
        sys.stderr.write(f"error: {e.errors()[0]['msg']}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
