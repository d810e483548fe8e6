"""``spacing solve``: search an instance under one model."""

import argparse
from pathlib import Path
from typing import Any, Dict, List

import orjson
import structlog

from spacing.cli.arguments import existing_file, positive_float
from spacing.core.reductions import ReducedInstance, solve_reduced
from spacing.core.rhythm import ModelKind, RhythmInstance, build_model, decode, solve_model, verify
from spacing.core.solver import SearchLimits, SearchOutcome, VarOrder
from spacing.utils.config import get_settings
from spacing.utils.constants import EXIT
from spacing.utils.errors import DecodeError, InstanceFormatError

logger = structlog.get_logger(__name__)

# Solutions printed in text mode before the rest is summarized.
TEXT_SOLUTION_LIMIT = 10


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="solve an instance file")
    parser.add_argument("instance", type=existing_file, help="rhythm or reduced instance (JSON)")
    parser.add_argument("--model", choices=[kind.value for kind in ModelKind], default=ModelKind.SM.value)
    parser.add_argument("--all", action="store_true", help="enumerate every solution")
    parser.add_argument("--timeout", type=positive_float, default=None, help="seconds (default from settings)")
    parser.add_argument("--var-order", choices=[order.value for order in VarOrder], default=VarOrder.FIRST_FAIL.value)
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=run)


def _load(path: Path) -> Any:
    try:
        payload = orjson.loads(path.read_bytes())
    except (OSError, orjson.JSONDecodeError) as e:
        raise InstanceFormatError(f"cannot read {path}: {e}") from e
    if isinstance(payload, dict) and "domains" in payload:
        return ReducedInstance.from_payload(payload)
    return RhythmInstance.from_payload(payload)


def _exit_code(outcome: SearchOutcome, exhaustive: bool) -> int:
    if outcome.timed_out and (exhaustive or not outcome.solution_count):
        return EXIT.TIMEOUT
    return EXIT.OK if outcome.solution_count else EXIT.UNSAT


def _stats(outcome: SearchOutcome) -> Dict[str, Any]:
    return {
        "status": "timeout" if outcome.timed_out else outcome.status.value,
        "solution_count": outcome.solution_count,
        "backtracks": outcome.backtracks,
        "nodes": outcome.nodes,
        "time": round(outcome.wall_time, 3),
    }


def _emit(payload: Dict[str, Any], fmt: str, lines: List[str]) -> None:
    if fmt == "json":
        print(orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode())
        return
    for key in ("status", "solution_count", "backtracks", "nodes", "time"):
        print(f"{key}: {payload[key]}")
    for line in lines:
        print(line)


def run(args: argparse.Namespace) -> int:
    timeout = args.timeout or get_settings().solve_timeout
    limits = SearchLimits(max_solutions=None if args.all else 1, timeout=timeout)
    instance = _load(args.instance)

    if isinstance(instance, ReducedInstance):
        result = solve_reduced(instance, limits)
        payload = _stats(result.outcome)
        payload["kind"] = instance.kind.value
        payload["model"] = sorted(result.model, key=abs) if result.model is not None else None
        lines = [f"model: {' '.join(str(literal) for literal in payload['model'])}"] if result.model is not None else []
        _emit(payload, args.format, lines)
        return _exit_code(result.outcome, args.all)

    kind = ModelKind(args.model)
    model = build_model(instance, kind)
    outcome = solve_model(model, model.heuristic(VarOrder(args.var_order)), limits)

    patterns = []
    for assignment in outcome.solutions:
        decoded = decode(assignment, instance, kind)
        if not verify(decoded, instance, kind):
            raise DecodeError(f"solution {assignment} failed the reference check")
        patterns.append([{str(beat): value for beat, value in sorted(voice.items())} for voice in decoded])

    payload = _stats(outcome)
    payload["model"] = kind.value
    payload["solutions"] = patterns
    lines = []
    for number, solution in enumerate(patterns[:TEXT_SOLUTION_LIMIT], start=1):
        lines.append(f"solution {number}:")
        for voice, pattern in enumerate(solution, start=1):
            lines.append(f"  voice {voice}: " + " ".join(f"{beat}:{value}" for beat, value in pattern.items()))
    if len(patterns) > TEXT_SOLUTION_LIMIT:
        lines.append(f"... {len(patterns) - TEXT_SOLUTION_LIMIT} more")

    logger.info("Instance solved", model=kind.value, **_stats(outcome))
    _emit(payload, args.format, lines)
    return _exit_code(outcome, args.all)
