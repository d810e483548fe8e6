"""Propagator interface and the per-run context handed to propagators."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Sequence, Set

from spacing.core.solver.domain import ChangeEvent
from spacing.core.solver.store import VariableStore


class Status(str, Enum):
    CONSISTENT = "consistent"
    FAILED = "failed"


class DomainWipeout(Exception):
    """Raised inside a propagator run when a domain would become empty."""


class PropagationContext:
    """Mutation front-end for one propagator run.

    Records which variables changed so the engine can wake their watchers.
    """

    __slots__ = ("store", "changed")

    def __init__(self, store: VariableStore):
        self.store = store
        self.changed: Set[int] = set()

    def mask(self, var: int) -> int:
        return self.store.mask(var)

    def _apply(self, var: int, event: ChangeEvent) -> bool:
        if event is ChangeEvent.FAILED:
            raise DomainWipeout(var)
        if event is ChangeEvent.REMOVED:
            self.changed.add(var)
            return True
        return False

    def intersect(self, var: int, keep: int) -> bool:
        return self._apply(var, self.store.intersect(var, keep))

    def remove(self, var: int, value: int) -> bool:
        return self._apply(var, self.store.remove(var, value))

    def remove_mask(self, var: int, values: int) -> bool:
        return self._apply(var, self.store.remove_mask(var, values))

    def assign(self, var: int, value: int) -> bool:
        return self._apply(var, self.store.assign(var, value))


class Propagator(ABC):
    """Filtering algorithm of one constraint.

    Subclasses implement ``filter``; it may raise ``DomainWipeout``, which
    ``propagate`` turns into ``Status.FAILED``.
    """

    name = "propagator"
    # Lower runs first; the engine drains priority 0 before looking at 1.
    priority = 0
    # True when one run always reaches the propagator's own fixpoint.
    idempotent = False

    def __init__(self, variables: Sequence[int]):
        self.variables: List[int] = list(variables)

    @property
    def watched(self) -> List[int]:
        return self.variables

    @abstractmethod
    def filter(self, ctx: PropagationContext) -> None:
        ...

    def propagate(self, ctx: PropagationContext) -> Status:
        try:
            self.filter(ctx)
        except DomainWipeout:
            return Status.FAILED
        return Status.CONSISTENT

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.variables)} vars)"
