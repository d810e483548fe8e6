"""Finite-domain solver kernel."""

from spacing.core.solver.domain import ChangeEvent, Domain, bits, domain_create, iter_bits, mask_of
from spacing.core.solver.engine import PropagationEngine, propagate_fixpoint
from spacing.core.solver.propagator import DomainWipeout, PropagationContext, Propagator, Status
from spacing.core.solver.search import (
    Heuristic,
    SearchLimits,
    SearchOutcome,
    SearchStatus,
    ValueOrder,
    VarOrder,
    search,
)
from spacing.core.solver.store import (
    Mark,
    VariableStore,
    checkpoint,
    domain_assign,
    domain_remove,
    rollback,
)

__all__ = [
    "ChangeEvent",
    "Domain",
    "DomainWipeout",
    "Heuristic",
    "Mark",
    "PropagationContext",
    "PropagationEngine",
    "Propagator",
    "SearchLimits",
    "SearchOutcome",
    "SearchStatus",
    "Status",
    "ValueOrder",
    "VarOrder",
    "VariableStore",
    "bits",
    "checkpoint",
    "domain_assign",
    "domain_create",
    "domain_remove",
    "iter_bits",
    "mask_of",
    "propagate_fixpoint",
    "rollback",
    "search",
]
