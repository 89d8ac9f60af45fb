"""Argument parsing for the flagq command line."""

import argparse
from collections.abc import Sequence

from app.config import OutputFormat
from app.verify.runner import SELECTORS


def int_list(text: str) -> list[int]:
    """Parse "1,0,2" (or a single integer) into a list of integers."""
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from e


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--N", dest="order", type=int, default=None, help="Truncation order (default 10)"
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="Output format",
    )
    common.add_argument("--jobs", type=int, default=None, help="Worker processes")
    common.add_argument("--log-level", dest="log_level", default=None, help="Logging level")
    common.add_argument(
        "--fixture-dir", dest="fixture_dir", default=None, help="Directory of fixture files"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with the groebner, hilbert, hl, check and fixtures verbs."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="flagq",
        description="Hilbert series of affinized flag varieties and Hall-Littlewood checks",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    groebner = commands.add_parser(
        "groebner", parents=[common], help="Reduced Groebner basis and leading-term ideal"
    )
    groebner.add_argument("--fixture", required=True, help="Fixture name or path")
    groebner.add_argument(
        "--expect", action="store_true", help="Compare the LT ideal with the stored expectation"
    )

    hilbert = commands.add_parser(
        "hilbert", parents=[common], help="Affinized Hilbert series at a multidegree"
    )
    source = hilbert.add_mutually_exclusive_group(required=True)
    source.add_argument("--fixture", help="Fixture name or path")
    source.add_argument("--model", help="Quadratic model file")
    hilbert.add_argument("--M", dest="target", type=int_list, required=True, help="Multidegree")
    hilbert.add_argument(
        "--greedy", action="store_true", help="Ignore fixture substitutions, quadratize greedily"
    )
    hilbert.add_argument(
        "--dump-model", dest="dump_model", default=None, help="Write the quadratic model here"
    )

    hl = commands.add_parser("hl", parents=[common], help="Modified Hall-Littlewood polynomials")
    hl.add_argument("--algebra", required=True, help="Algebra name, e.g. sl3 or so5")
    hl.add_argument(
        "--lambda", dest="lam", type=int_list, required=True, help="Dynkin labels of lambda"
    )

    check = commands.add_parser(
        "check",
        parents=[common],
        help="Run identity and conjecture checks",
        epilog=(
            "Without check parameters the selector's share of the acceptance grid runs; "
            "there --N sets both the identity order (default 12) and the conjecture order "
            "(default 8)."
        ),
    )
    check.add_argument("selector", choices=["all", *SELECTORS], help="Which checks to run")
    check.add_argument("--M1", type=int, default=None)
    check.add_argument("--M2", type=int, default=None)
    check.add_argument("--M", dest="target", type=int_list, default=None, help="Multidegree")
    check.add_argument("--algebra", default=None, help="Algebra for conj51 and q1")
    check.add_argument("--case", default=None, help="Case for manifest, ep and conj21")

    fixtures = commands.add_parser("fixtures", help="Fixture corpus")
    fixture_commands = fixtures.add_subparsers(dest="fixtures_command", required=True)
    fixture_commands.add_parser("list", parents=[common], help="List available fixtures")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
