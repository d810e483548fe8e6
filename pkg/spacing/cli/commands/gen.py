"""``spacing gen``: write a random Asynchronous Rhythms instance."""

import argparse
import sys
from pathlib import Path

import structlog

from spacing.core.rhythm import OnsetBasis, extend_instance, generate_instance, save_instance
from spacing.utils.constants import EXIT, GENERATOR
from spacing.utils.errors import UsageError

logger = structlog.get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="generate a random instance")
    parser.add_argument("--h", type=int, required=True, help="number of voices")
    parser.add_argument("--p1", type=int, required=True, help="period of the first voice")
    parser.add_argument("--kh", type=int, required=True, help="repetitions of the last voice")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--onset-basis",
        choices=[basis.value for basis in OnsetBasis],
        default=OnsetBasis.PATTERN.value,
        help="read the onset density per pattern beat or per sounding beat",
    )
    parser.add_argument(
        "--extend",
        type=float,
        default=0.0,
        metavar="FRACTION",
        help=f"remove this share of domain values (extended problem uses {GENERATOR.EXTENDED_FRACTION})",
    )
    parser.add_argument("--out", type=Path, default=None, help="instance file; JSON goes to stdout when omitted")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.h < 1:
        raise UsageError("--h must be at least 1")
    if args.p1 < GENERATOR.MIN_P1:
        raise UsageError(f"--p1 must be at least {GENERATOR.MIN_P1}")
    if args.kh < 1:
        raise UsageError("--kh must be at least 1")
    if not 0 <= args.extend < 1:
        raise UsageError("--extend must lie in [0, 1)")

    instance = generate_instance(args.h, args.p1, args.kh, args.seed, OnsetBasis(args.onset_basis))
    if args.extend:
        instance = extend_instance(instance, args.extend, args.seed)

    if args.out is None:
        sys.stdout.write(instance.to_json().decode() + "\n")
        logger.info("Instance written", path="-", n=instance.n, h=instance.h)
        # stdout carries the JSON only
        print(instance.summary(), file=sys.stderr)
        return EXIT.OK

    save_instance(instance, args.out)
    logger.info("Instance written", path=str(args.out), n=instance.n, h=instance.h)
    print(f"wrote {args.out}")
    print(instance.summary())
    return EXIT.OK
