"""spacing - command-line entry point."""

import sys
from typing import List, Optional

import structlog

from spacing.cli.parser import build_parser
from spacing.utils.constants import EXIT
from spacing.utils.errors import (
    DecodeError,
    DimacsError,
    GenerationError,
    InstanceFormatError,
    OversizeError,
    ReductionError,
    SpecError,
    UsageError,
)
from spacing.utils.logging import setup_logging
from spacing.utils.version import VERSION

logger = structlog.get_logger(__name__)

# Errors caused by the files or parameters handed to a command.
DATA_ERRORS = (
    InstanceFormatError,
    DimacsError,
    ReductionError,
    GenerationError,
    SpecError,
    DecodeError,
    OversizeError,
)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT.USAGE
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT.OK

    setup_logging(args.log_level)
    logger.debug("Starting spacing", version=VERSION, command=args.command)

    try:
        return args.handler(args)
    except UsageError as e:
        print(f"spacing {args.command}: {e}", file=sys.stderr)
        return EXIT.USAGE
    except DATA_ERRORS as e:
        logger.debug("Command failed", command=args.command, error=str(e))
        print(f"spacing {args.command}: {e}", file=sys.stderr)
        return EXIT.DATA


if __name__ == "__main__":
    sys.exit(main())
