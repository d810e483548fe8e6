"""
Brute-force support enumeration and domain-consistency oracles.

Exponential by construction; every entry point refuses to start when the
product of domain sizes exceeds the configured enumeration cap.
"""

import itertools
import math
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from spacing.utils.config import get_settings
from spacing.utils.errors import OversizeError

Checker = Callable[[Sequence[int]], bool]


def _normalise(domains: Sequence[Iterable[int]]) -> List[List[int]]:
    return [sorted(set(domain)) for domain in domains]


def _guard(domains: List[List[int]], cap: Optional[int]) -> None:
    cap = get_settings().enumeration_cap if cap is None else cap
    size = math.prod(len(domain) for domain in domains)
    if size > cap:
        raise OversizeError(f"{size} assignments exceed the enumeration cap {cap}")


def enumerate_supports(
    domains: Sequence[Iterable[int]],
    checker: Checker,
    cap: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """All checker-true assignments, in lexicographic order."""
    values = _normalise(domains)
    _guard(values, cap)
    return [assignment for assignment in itertools.product(*values) if checker(assignment)]


def count_supports_recursive(
    domains: Sequence[Iterable[int]],
    checker: Checker,
    cap: Optional[int] = None,
) -> int:
    """Count supports by recursive generation; a second path next to ``enumerate_supports``."""
    values = _normalise(domains)
    _guard(values, cap)
    prefix: List[int] = []

    def extend(depth: int) -> int:
        if depth == len(values):
            return 1 if checker(tuple(prefix)) else 0
        total = 0
        for value in values[depth]:
            prefix.append(value)
            total += extend(depth + 1)
            prefix.pop()
        return total

    return extend(0)


def dc_oracle(
    domains: Sequence[Iterable[int]],
    checker: Checker,
    cap: Optional[int] = None,
) -> Optional[List[FrozenSet[int]]]:
    """Keep a value iff some support uses it; None when there is no support."""
    supports = enumerate_supports(domains, checker, cap)
    if not supports:
        return None
    return [frozenset(column) for column in zip(*supports)] if supports[0] else []
