"""Main entry point for the flagq command line."""

import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from app.cli import dispatch, parse_args, render
from app.config import configure_settings
from app.errors import (
    ConfigurationError,
    FixtureError,
    IdentityNotClaimedError,
    QuadratizationError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTATION = 3


def main(argv: Sequence[str] | None = None) -> int:
    """Parse flags, run one command and print its output.

    Returns:
        Exit status: 0 success, 1 failing check, 2 usage or input error, 3 computation error
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = configure_settings(
            truncation=args.order,
            jobs=args.jobs,
            output_format=args.output_format,
            log_level=args.log_level,
            fixture_dir=args.fixture_dir,
        )
    except ValidationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    # stderr keeps stdout byte-identical between runs
    try:
        logging.basicConfig(
            level=settings.log_level.upper(),
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            stream=sys.stderr,
            force=True,
        )
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        output = dispatch(args)
    except (ConfigurationError, FixtureError, IdentityNotClaimedError) as e:
        logger.error(f"{e}")
        return EXIT_USAGE
    except QuadratizationError as e:
        logger.error(f"{e}; partial state: {e.partial_state()}")
        return EXIT_COMPUTATION
    except (ValueError, ArithmeticError) as e:
        logger.error(f"Computation failed: {e}")
        return EXIT_COMPUTATION

    print(render(output, settings.structured))
    return output.exit_code


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
