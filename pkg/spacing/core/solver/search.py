"""
Depth-first search with binary branching (X = v, then X != v).

Propagation runs to fixpoint at every node. A failed node below the root
counts as one backtrack; a failure of the root fixpoint counts none.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, Field

from spacing.core.solver.domain import lowest
from spacing.core.solver.engine import PropagationEngine
from spacing.core.solver.propagator import Propagator, Status
from spacing.core.solver.store import Mark, VariableStore

logger = structlog.get_logger(__name__)


class VarOrder(str, Enum):
    FIRST_FAIL = "first-fail"
    LEX = "lex"


class ValueOrder(str, Enum):
    S_FIRST = "s-first"
    ASCENDING = "ascending"


class SearchStatus(str, Enum):
    SAT = "sat"
    UNSAT = "unsat"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class Heuristic:
    """Deterministic branching choices.

    ``first-fail`` picks the smallest domain, lowest index on ties; ``lex``
    picks the lowest-index unassigned variable. ``s-first`` tries the values
    in ``preferred`` (the union of the S sets) before the others.
    """
    var_order: VarOrder = VarOrder.FIRST_FAIL
    value_order: ValueOrder = ValueOrder.S_FIRST
    preferred: int = 0

    def select_variable(self, store: VariableStore) -> Optional[int]:
        if self.var_order is VarOrder.LEX:
            for var in range(len(store)):
                if not store.is_assigned(var):
                    return var
            return None

        best, best_size = None, 0
        for var in range(len(store)):
            size = store.size(var)
            if size > 1 and (best is None or size < best_size):
                best, best_size = var, size
                if size == 2:
                    break
        return best

    def select_value(self, store: VariableStore, var: int) -> int:
        mask = store.mask(var)
        if self.value_order is ValueOrder.S_FIRST and mask & self.preferred:
            return lowest(mask & self.preferred)
        return lowest(mask)


class SearchLimits(BaseModel):
    max_solutions: Optional[int] = None
    timeout: Optional[float] = None
    keep_solutions: bool = True


class SearchOutcome(BaseModel):
    solutions: List[List[int]] = Field(default_factory=list)
    solution_count: int = 0
    backtracks: int = 0
    nodes: int = 0
    wall_time: float = 0.0
    timed_out: bool = False

    @property
    def status(self) -> SearchStatus:
        if self.solution_count:
            return SearchStatus.SAT
        if self.timed_out:
            return SearchStatus.TIMEOUT
        return SearchStatus.UNSAT


def search(
    store: VariableStore,
    propagators: Sequence[Propagator],
    heuristic: Optional[Heuristic] = None,
    limits: Optional[SearchLimits] = None,
    final_check: Optional[Callable[[List[int]], bool]] = None,
) -> SearchOutcome:
    """Explore the store's search space; the store is restored afterwards.

    ``final_check`` filters complete assignments; a rejected leaf is a
    backtrack.
    """
    heuristic = heuristic or Heuristic()
    limits = limits or SearchLimits()
    started = time.monotonic()
    deadline = started + limits.timeout if limits.timeout else None

    engine = PropagationEngine(store, propagators)
    outcome = SearchOutcome(nodes=1)
    root = store.checkpoint()
    try:
        status = engine.fixpoint()
        if status is Status.CONSISTENT:
            _explore(store, engine, heuristic, limits, final_check, deadline, status, outcome)
    finally:
        store.rollback(root)

    outcome.wall_time = time.monotonic() - started
    logger.debug(
        "Search finished",
        status=outcome.status.value,
        solutions=outcome.solution_count,
        nodes=outcome.nodes,
        backtracks=outcome.backtracks,
        propagator_runs=engine.runs,
        wall_time=round(outcome.wall_time, 3),
    )
    return outcome


def _explore(
    store: VariableStore,
    engine: PropagationEngine,
    heuristic: Heuristic,
    limits: SearchLimits,
    final_check: Optional[Callable[[List[int]], bool]],
    deadline: Optional[float],
    status: Status,
    outcome: SearchOutcome,
) -> None:
    # Open left branches: (mark taken before X = v, X, v)
    stack: List[Tuple[Mark, int, int]] = []

    while True:
        if deadline is not None and time.monotonic() > deadline:
            outcome.timed_out = True
            return

        if status is Status.CONSISTENT:
            var = heuristic.select_variable(store)
            if var is not None:
                value = heuristic.select_value(store, var)
                stack.append((store.checkpoint(), var, value))
                outcome.nodes += 1
                store.assign(var, value)
                status = engine.fixpoint(engine.watching([var]))
                continue

            assignment = [store.value(i) for i in range(len(store))]
            if final_check is None or final_check(assignment):
                outcome.solution_count += 1
                if limits.keep_solutions:
                    outcome.solutions.append(assignment)
                if limits.max_solutions is not None and outcome.solution_count >= limits.max_solutions:
                    return
            else:
                outcome.backtracks += 1
        else:
            outcome.backtracks += 1

        if not stack:
            return
        mark, var, value = stack.pop()
        store.rollback(mark)
        outcome.nodes += 1
        # The domain had at least two values when we branched, so this cannot empty it.
        store.remove(var, value)
        status = engine.fixpoint(engine.watching([var]))
