"""``spacing check``: compare propagators and reductions with brute force."""

import argparse

import orjson

from spacing.cli.arguments import positive_float
from spacing.core.bench import SUITES, CheckOptions, run_suite
from spacing.utils.constants import EXIT
from spacing.utils.errors import UsageError


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="run oracle equivalence suites")
    parser.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-v", type=int, default=2, help="largest CNF variable count for the reductions suite")
    parser.add_argument("--max-c", type=int, default=3, help="largest CNF clause count for the reductions suite")
    parser.add_argument("--timeout", type=positive_float, default=60.0, help="seconds per reduced instance")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.max_v < 1 or args.max_c < 1:
        raise UsageError("--max-v and --max-c must be at least 1")

    options = CheckOptions(
        trials=args.trials,
        seed=args.seed,
        max_v=args.max_v,
        max_c=args.max_c,
        timeout=args.timeout,
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]

    failed = False
    for name in names:
        result = run_suite(name, options)
        verdict = "PASS" if result.passed else "FAIL"
        print(f"{verdict} {name} ({result.trials} trials)")
        for note in result.notes:
            print(f"  note: {note}")
        if not result.passed:
            failed = True
            print(orjson.dumps(result.counterexample, option=orjson.OPT_INDENT_2).decode())
    return EXIT.CHECK_FAILED if failed else EXIT.OK
