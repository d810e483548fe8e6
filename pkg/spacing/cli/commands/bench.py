"""``spacing bench``: solve the random instance grid and report per cell."""

import argparse
import sys
from pathlib import Path

import structlog

from spacing.cli.arguments import existing_file, grid_cell, model_list, positive_float
from spacing.core.bench import BenchRunner, render, save_report, summary_lines
from spacing.core.rhythm import OnsetBasis
from spacing.core.solver import VarOrder
from spacing.utils.config import default_bench_config, load_bench_config, merge_bench_config
from spacing.utils.constants import EXIT, GENERATOR, LIMITS

logger = structlog.get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="run the benchmark grid")
    parser.add_argument("--config", type=existing_file, default=None, help="bench config (JSON)")
    parser.add_argument(
        "--grid",
        type=grid_cell,
        action="append",
        default=None,
        metavar="H,P1,KH",
        help="grid cell; repeat for several (default: the 27-cell grid)",
    )
    parser.add_argument("--instances", type=int, default=None, help="instances per cell")
    timeout = parser.add_mutually_exclusive_group()
    timeout.add_argument("--timeout", type=positive_float, default=None, help="seconds per instance and model")
    timeout.add_argument(
        "--protocol-timeout",
        action="store_true",
        help=f"use the {LIMITS.PROTOCOL_TIMEOUT:.0f} s limit of the full protocol",
    )
    parser.add_argument("--models", type=model_list, default=None, help="comma-separated subset of om,sm,sb,sr")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument(
        "--extended",
        action="store_true",
        help=f"remove {GENERATOR.EXTENDED_FRACTION:.0%} of the domain values from every instance",
    )
    parser.add_argument("--onset-basis", choices=[basis.value for basis in OnsetBasis], default=None)
    parser.add_argument("--var-order", choices=[order.value for order in VarOrder], default=None)
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--out", type=Path, default=None, help="report file; stdout when omitted")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = load_bench_config(args.config) if args.config else default_bench_config()
    updates = {
        "grid": args.grid,
        "instances": args.instances,
        "timeout": LIMITS.PROTOCOL_TIMEOUT if args.protocol_timeout else args.timeout,
        "models": args.models,
        "seed": args.seed,
        "extended_fraction": GENERATOR.EXTENDED_FRACTION if args.extended else None,
        "onset_basis": args.onset_basis,
        "var_order": args.var_order,
        "jobs": args.jobs,
    }
    config = merge_bench_config(config, updates)

    runner = BenchRunner(config)
    report = runner.run()

    if args.out is None:
        sys.stdout.write(render(report, args.format))
        if args.format == "json":
            sys.stdout.write("\n")
    else:
        save_report(report, args.out, args.format)
        logger.info("Report written", path=str(args.out), format=args.format)

    for line in summary_lines(report):
        print(line, file=sys.stderr)
    return EXIT.OK
