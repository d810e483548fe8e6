"""
Variable store with a trail of removals.

Every mutation made while a checkpoint is open is logged as ``(var, removed
bits)``; rolling back to a mark ORs the removed bits back in reverse order.
"""

from typing import Iterable, List, NamedTuple, Tuple, Union

from spacing.core.solver.domain import ChangeEvent, Domain, lowest, mask_of
from spacing.utils.errors import DomainError, TrailError


class Mark(NamedTuple):
    serial: int
    depth: int
    trail_length: int


class VariableStore:
    """Indexed domains plus the chronological change log."""

    def __init__(self, domains: Iterable[Union[int, Domain, Iterable[int]]]):
        """Domains may be given as raw masks, `Domain` objects or value iterables."""
        self._masks: List[int] = []
        for domain in domains:
            if isinstance(domain, int):
                mask = domain
            elif isinstance(domain, Domain):
                mask = domain.mask
            else:
                mask = mask_of(domain)
            if mask <= 0:
                raise DomainError(f"variable {len(self._masks)} has an empty domain")
            self._masks.append(mask)
        self._trail: List[Tuple[int, int]] = []
        self._marks: List[Tuple[int, int]] = []
        self._serial = 0

    def __len__(self) -> int:
        return len(self._masks)

    # =========================================================================
    # Reading
    # =========================================================================

    def mask(self, var: int) -> int:
        return self._masks[var]

    def domain(self, var: int) -> Domain:
        return Domain(self._masks[var])

    def domains(self) -> List[Domain]:
        return [Domain(mask) for mask in self._masks]

    def snapshot(self) -> Tuple[int, ...]:
        """Bit-exact copy of every domain mask."""
        return tuple(self._masks)

    def size(self, var: int) -> int:
        return self._masks[var].bit_count()

    def contains(self, var: int, value: int) -> bool:
        return bool(self._masks[var] >> value & 1)

    def is_assigned(self, var: int) -> bool:
        mask = self._masks[var]
        return mask & (mask - 1) == 0

    def value(self, var: int) -> int:
        mask = self._masks[var]
        if mask & (mask - 1):
            raise DomainError(f"variable {var} is not assigned")
        return lowest(mask)

    def all_assigned(self) -> bool:
        return all(mask & (mask - 1) == 0 for mask in self._masks)

    # =========================================================================
    # Mutation
    # =========================================================================

    def intersect(self, var: int, keep: int) -> ChangeEvent:
        """Restrict ``var`` to ``keep``; never leaves an empty domain behind."""
        old = self._masks[var]
        new = old & keep
        if new == old:
            return ChangeEvent.NO_CHANGE
        if new == 0:
            return ChangeEvent.FAILED
        if self._marks:
            self._trail.append((var, old ^ new))
        self._masks[var] = new
        return ChangeEvent.REMOVED

    def remove(self, var: int, value: int) -> ChangeEvent:
        return self.intersect(var, ~(1 << value))

    def remove_mask(self, var: int, values: int) -> ChangeEvent:
        return self.intersect(var, ~values)

    def assign(self, var: int, value: int) -> ChangeEvent:
        if not self._masks[var] >> value & 1:
            return ChangeEvent.FAILED
        return self.intersect(var, 1 << value)

    # =========================================================================
    # Checkpoints
    # =========================================================================

    @property
    def depth(self) -> int:
        return len(self._marks)

    def checkpoint(self) -> Mark:
        self._serial += 1
        mark = Mark(self._serial, len(self._marks), len(self._trail))
        self._marks.append((mark.serial, mark.trail_length))
        return mark

    def rollback(self, mark: Mark) -> None:
        """Restore every domain to its state at ``mark`` and close it.

        Marks opened after ``mark`` are closed too.
        """
        if mark.depth >= len(self._marks) or self._marks[mark.depth] != (mark.serial, mark.trail_length):
            raise TrailError(f"mark {mark.serial} was already rolled back or never opened")

        trail = self._trail
        masks = self._masks
        while len(trail) > mark.trail_length:
            var, removed = trail.pop()
            masks[var] |= removed
        del self._marks[mark.depth:]


def domain_remove(store: VariableStore, var: int, value: int) -> ChangeEvent:
    return store.remove(var, value)


def domain_assign(store: VariableStore, var: int, value: int) -> ChangeEvent:
    return store.assign(var, value)


def checkpoint(store: VariableStore) -> Mark:
    return store.checkpoint()


def rollback(store: VariableStore, mark: Mark) -> None:
    store.rollback(mark)
