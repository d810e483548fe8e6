"""Propagation to fixpoint with FIFO queues per priority level."""

from collections import deque
from typing import Deque, Dict, Iterable, List, Optional, Sequence

from spacing.core.solver.propagator import PropagationContext, Propagator, Status
from spacing.core.solver.store import VariableStore


class PropagationEngine:
    """Schedules a fixed propagator set over one store."""

    def __init__(self, store: VariableStore, propagators: Sequence[Propagator]):
        self.store = store
        self.propagators: List[Propagator] = list(propagators)
        self._watchers: Dict[int, List[int]] = {}
        for index, propagator in enumerate(self.propagators):
            for var in set(propagator.watched):
                self._watchers.setdefault(var, []).append(index)
        self._levels = sorted({p.priority for p in self.propagators})
        self.runs = 0

    def watching(self, variables: Iterable[int]) -> List[int]:
        """Indices of the propagators watching any of ``variables``."""
        seen = set()
        result = []
        for var in variables:
            for index in self._watchers.get(var, ()):
                if index not in seen:
                    seen.add(index)
                    result.append(index)
        return result

    def fixpoint(self, queue: Optional[Iterable[int]] = None) -> Status:
        """Run until no propagator can remove anything, or one fails.

        ``queue`` seeds the run with propagator indices; None seeds all.
        """
        queues: Dict[int, Deque[int]] = {level: deque() for level in self._levels}
        queued = set()
        seed = range(len(self.propagators)) if queue is None else queue
        for index in seed:
            if index not in queued:
                queued.add(index)
                queues[self.propagators[index].priority].append(index)

        while queued:
            for level in self._levels:
                if queues[level]:
                    index = queues[level].popleft()
                    break
            queued.discard(index)

            propagator = self.propagators[index]
            ctx = PropagationContext(self.store)
            self.runs += 1
            if propagator.propagate(ctx) is Status.FAILED:
                return Status.FAILED

            for var in ctx.changed:
                for other in self._watchers.get(var, ()):
                    if other in queued or (other == index and propagator.idempotent):
                        continue
                    queued.add(other)
                    queues[self.propagators[other].priority].append(other)

        return Status.CONSISTENT


def propagate_fixpoint(
    store: VariableStore,
    propagators: Sequence[Propagator],
    queue: Optional[Iterable[int]] = None,
) -> Status:
    """One-shot fixpoint over ``propagators``."""
    return PropagationEngine(store, propagators).fixpoint(queue)
