"""
Finite domains as bitsets over non-negative value ids.

Bit ``v`` of the mask is set iff value ``v`` is in the domain. Value 0 is the
dummy ("no onset", or any value outside a constraint's S).
"""

from enum import Enum
from typing import Iterable, Iterator, List

from spacing.utils.errors import DomainError


class ChangeEvent(str, Enum):
    """Outcome of a single domain mutation."""
    NO_CHANGE = "no_change"
    REMOVED = "removed"
    FAILED = "failed"


def mask_of(values: Iterable[int]) -> int:
    mask = 0
    for value in values:
        if value < 0:
            raise DomainError(f"value ids must be non-negative, got {value}")
        mask |= 1 << value
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the value ids of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> List[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Domain:
    """Immutable set of value ids, never empty."""

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        if mask <= 0:
            raise DomainError("a domain cannot be empty")
        self.mask = mask

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Domain":
        return cls(mask_of(values))

    def __contains__(self, value: int) -> bool:
        return value >= 0 and bool(self.mask >> value & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Domain):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"Domain({{{', '.join(str(v) for v in self)}}})"

    @property
    def is_singleton(self) -> bool:
        return self.mask & (self.mask - 1) == 0

    @property
    def value(self) -> int:
        """The single value of an assigned domain."""
        if not self.is_singleton:
            raise DomainError(f"{self!r} is not assigned")
        return lowest(self.mask)

    @property
    def min(self) -> int:
        return lowest(self.mask)

    def values(self) -> List[int]:
        return bits(self.mask)


def domain_create(values: Iterable[int]) -> Domain:
    """Build a domain holding exactly ``values``; an empty set is an error."""
    return Domain.from_values(values)
