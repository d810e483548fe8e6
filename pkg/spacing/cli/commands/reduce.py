"""``spacing reduce``: compile a DIMACS formula into a Spacing instance."""

import argparse
import sys
from pathlib import Path

import structlog

from spacing.cli.arguments import existing_file
from spacing.core.reductions import ReductionKind, load_dimacs, reduce, save_reduced
from spacing.utils.constants import EXIT

logger = structlog.get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("reduce", help="reduce a CNF formula to a Spacing instance")
    parser.add_argument("cnf", type=existing_file, help="DIMACS cnf file")
    parser.add_argument("--kind", choices=[kind.value for kind in ReductionKind], default=ReductionKind.SPACING.value)
    parser.add_argument("--out", type=Path, default=None, help="instance file; JSON goes to stdout when omitted")
    parser.add_argument(
        "--mapping",
        type=Path,
        default=None,
        help="value-label file (default: <out>.mapping.json next to the instance)",
    )
    parser.set_defaults(handler=run)


def mapping_path(out: Path) -> Path:
    return out.with_name(f"{out.stem}.mapping.json")


def run(args: argparse.Namespace) -> int:
    cnf = load_dimacs(args.cnf)
    reduced = reduce(cnf, ReductionKind(args.kind))

    if args.out is None:
        sys.stdout.write(reduced.to_json().decode() + "\n")
        if args.mapping is not None:
            args.mapping.parent.mkdir(parents=True, exist_ok=True)
            args.mapping.write_bytes(reduced.mapping_json())
        return EXIT.OK

    mapping = args.mapping or mapping_path(args.out)
    save_reduced(reduced, args.out, mapping)
    logger.info("Reduced instance written", path=str(args.out), kind=args.kind, n=reduced.n)
    print(f"wrote {args.out} (n={reduced.n}, v={reduced.v}, c={reduced.c})")
    print(f"wrote {mapping}")
    return EXIT.OK
