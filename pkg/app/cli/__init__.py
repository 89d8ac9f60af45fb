"""Command-line surface: argument parsing, commands and output rendering."""

from app.cli.commands import (
    cmd_check,
    cmd_fixtures_list,
    cmd_groebner,
    cmd_hilbert,
    cmd_hl,
    dispatch,
)
from app.cli.output import CommandOutput, render
from app.cli.parser import build_parser, int_list, parse_args

__all__ = [
    "CommandOutput",
    "build_parser",
    "cmd_check",
    "cmd_fixtures_list",
    "cmd_groebner",
    "cmd_hilbert",
    "cmd_hl",
    "dispatch",
    "int_list",
    "parse_args",
    "render",
]
