"""Argument parser for the ``spacing`` command."""

import argparse

from spacing.cli.commands import bench, check, gen, reduce, solve
from spacing.utils.errors import UsageError
from spacing.utils.version import VERSION


class SpacingArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so ``main`` owns the exit code."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> SpacingArgumentParser:
    parser = SpacingArgumentParser(
        prog="spacing",
        description="Propagators, models and SAT reductions for the Spacing constraint family.",
    )
    parser.add_argument("--version", action="version", version=f"spacing {VERSION}")
    parser.add_argument("--log-level", default=None, help="override SPACING_LOG_LEVEL")

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in (gen, solve, bench, check, reduce):
        command.register(subparsers)
    return parser
