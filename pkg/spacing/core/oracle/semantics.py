"""
Reference checkers for complete assignments.

These are written directly from the constraint definitions and share no
code with the propagators.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from spacing.utils.errors import SpecError


@dataclass(frozen=True)
class SpacingSpec:
    """Spacing(S, A, B): after the i-th occurrence of d, the next one follows
    within [a_i, b_i] positions, for i < k."""
    s: frozenset
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    k: int
    n: int

    def __post_init__(self) -> None:
        if len(self.a) != self.k - 1 or len(self.b) != self.k - 1:
            raise SpecError(f"A and B need k-1 = {self.k - 1} entries")
        if any(low > high for low, high in zip(self.a, self.b)):
            raise SpecError("every a_i must be <= b_i")


def occ(d: int, prefix: Iterable[int]) -> int:
    return sum(1 for value in prefix if value == d)


def _positions(assignment: Sequence[int], d: int) -> List[int]:
    return [i + 1 for i, value in enumerate(assignment) if value == d]


def check_spacing(assignment: Sequence[int], spec: SpacingSpec) -> bool:
    if len(assignment) != spec.n:
        return False
    for d in spec.s:
        positions = _positions(assignment, d)
        for i in range(1, spec.k):
            if len(positions) < i:
                break
            if len(positions) == i:
                return False
            distance = positions[i] - positions[i - 1]
            if not spec.a[i - 1] <= distance <= spec.b[i - 1]:
                return False
    return True


def check_spacing_f(assignment: Sequence[int], spec: SpacingSpec) -> bool:
    return check_spacing(assignment, spec) and all(d in assignment for d in spec.s)


def check_spacing1(assignment: Sequence[int], s: Iterable[int], p: int, k: int) -> bool:
    for d in s:
        positions = _positions(assignment, d)
        if len(positions) != k:
            return False
        if positions[0] > p or positions[-1] > k * p:
            return False
        if any(b - a != p for a, b in zip(positions, positions[1:])):
            return False
    return True


def check_spacing_sb(assignment: Sequence[int], d: int, m: int, p: int, k: int) -> bool:
    if occ(d, assignment[:p]) != m:
        return False
    for index, value in enumerate(assignment):
        position = index + 1
        expected = position <= k * p and assignment[(position - 1) % p] == d
        if (value == d) != expected:
            return False
    return True


def check_spacing_h(assignment: Sequence[int], voices: Sequence[Tuple[Iterable[int], int, int]]) -> bool:
    """Conjunction of Spacing1 over voices given as ``(S, p, k)``."""
    seen: set = set()
    for s, _, _ in voices:
        s = set(s)
        if seen & s:
            raise SpecError("voice value sets must be pairwise disjoint")
        seen |= s
    return all(check_spacing1(assignment, s, p, k) for s, p, k in voices)
