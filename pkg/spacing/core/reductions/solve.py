"""Searching reduced instances and reading models back out of their supports."""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence

import structlog

from spacing.core.propagators import (
    BoundedSpacingPropagator,
    BoundedSpacingSpec,
    Spacing1Propagator,
    Spacing1Spec,
    SpacingDecomposition,
)
from spacing.core.reductions.encoders import ReducedInstance, ReductionKind, literal_of
from spacing.core.solver import (
    Heuristic,
    Propagator,
    SearchLimits,
    SearchOutcome,
    ValueOrder,
    VariableStore,
    VarOrder,
    search,
)
from spacing.utils.config import get_settings
from spacing.utils.constants import VALUES
from spacing.utils.errors import ReductionError

logger = structlog.get_logger(__name__)


@dataclass
class ReductionResult:
    outcome: SearchOutcome
    model: Optional[FrozenSet[int]]

    @property
    def satisfiable(self) -> bool:
        return self.model is not None


def reduced_propagators(reduced: ReducedInstance, cap: Optional[int] = None) -> List[Propagator]:
    """One joint automaton when S is small, per-value automata otherwise;
    one Spacing1 per voice for the two-voice construction."""
    variables = list(range(reduced.n))
    if reduced.kind is ReductionKind.SPACING_H:
        return [
            Spacing1Propagator(Spacing1Spec(frozenset(voice.s), voice.p, reduced.k, reduced.n), variables)
            for voice in reduced.voices
        ]

    cap = get_settings().bounded_s_cap if cap is None else cap
    spec = BoundedSpacingSpec(frozenset(reduced.s), reduced.a, reduced.b, reduced.k, reduced.n, reduced.forced)
    if len(spec.s) <= cap:
        return [BoundedSpacingPropagator(spec, variables, cap)]
    return [SpacingDecomposition(spec, variables)]


def solve_reduced(
    reduced: ReducedInstance,
    limits: Optional[SearchLimits] = None,
    heuristic: Optional[Heuristic] = None,
) -> ReductionResult:
    """Find one support and extract the model it encodes."""
    limits = limits or SearchLimits(max_solutions=1)
    heuristic = heuristic or Heuristic(VarOrder.FIRST_FAIL, ValueOrder.ASCENDING)
    store = VariableStore(reduced.domains)
    outcome = search(store, reduced_propagators(reduced), heuristic, limits, final_check=reduced.check)

    model = extract_model(outcome.solutions[0], reduced) if outcome.solutions else None
    logger.debug(
        "Reduced instance solved",
        kind=reduced.kind.value,
        n=reduced.n,
        satisfiable=model is not None,
        timed_out=outcome.timed_out,
        backtracks=outcome.backtracks,
    )
    return ReductionResult(outcome, model)


def _model_region(support: Sequence[int], reduced: ReducedInstance) -> List[int]:
    v, c = reduced.v, reduced.c
    if reduced.kind in (ReductionKind.SPACING, ReductionKind.SPACING_F):
        return list(support[:v])
    if reduced.kind is ReductionKind.SPACING_F_NOMAX:
        return list(support[: 2 * v + 1])

    p1 = reduced.voices[0].p
    region = []
    for j in range(c):
        start = j * p1 + c
        region.extend(value for value in support[start : start + 2 * c * v] if 1 <= value <= 2 * v)
    return region


def extract_model(support: Optional[Sequence[int]], reduced: ReducedInstance) -> Optional[FrozenSet[int]]:
    """The literal set a support encodes; checked against every clause."""
    if support is None:
        return None
    if len(support) != reduced.n:
        raise ReductionError(f"support has {len(support)} values, the instance {reduced.n}")

    region = _model_region(support, reduced)
    model = frozenset(literal_of(value, reduced.v) for value in region if value != VALUES.DUMMY)
    if not reduced.cnf().satisfied_by(model):
        raise ReductionError(f"support encodes {sorted(model)}, which is not a model of the formula")
    return model
