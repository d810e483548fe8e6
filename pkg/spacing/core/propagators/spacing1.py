"""
Spacing1 propagator: every value of S occupies one position of the first
period and repeats exactly p positions later, k times in total.

Filtering channels X onto a view where values outside S collapse to the
dummy 0, folds the k aligned positions of every period slot into one set,
and runs Regin filtering on the graph between S (plus p - |S| dummy copies)
and the p slots. The result is domain consistency on the constraint.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence

from spacing.core.propagators.matching import ValueGraph, WarmMatching, regin_filter
from spacing.core.solver.domain import mask_of
from spacing.core.solver.propagator import DomainWipeout, PropagationContext, Propagator
from spacing.utils.constants import VALUES
from spacing.utils.errors import SpecError

DUMMY_BIT = 1 << VALUES.DUMMY


@dataclass(frozen=True)
class Spacing1Spec:
    s: FrozenSet[int]
    p: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.k < 1:
            raise SpecError(f"period and repetitions must be positive (p={self.p}, k={self.k})")
        if self.p * self.k > self.n:
            raise SpecError(f"p*k = {self.p * self.k} exceeds n = {self.n}")
        if VALUES.DUMMY in self.s:
            raise SpecError("the dummy value 0 cannot belong to S")

    @property
    def s_mask(self) -> int:
        return mask_of(self.s)

    @property
    def horizon(self) -> int:
        """Last position that may hold a value of S."""
        return self.p * self.k


@dataclass
class FoldedDomains:
    """``sets[i]`` is the channeled mask of period slot ``i + 1``."""
    sets: List[int]

    @property
    def failed(self) -> bool:
        return any(mask == 0 for mask in self.sets)


def channel(masks: Sequence[int], s_mask: int) -> List[int]:
    """Collapse every value outside S to the dummy bit."""
    return [(mask & s_mask) | (DUMMY_BIT if mask & ~s_mask else 0) for mask in masks]


def unchannel(channeled: int, s_mask: int) -> int:
    """Mask of X-values allowed by a channeled mask (dummy admits everything outside S)."""
    return (channeled & s_mask) | (~s_mask if channeled & DUMMY_BIT else 0)


def fold(channeled: Sequence[int], p: int, k: int) -> FoldedDomains:
    sets = []
    for slot in range(p):
        mask = -1
        for j in range(k):
            mask &= channeled[j * p + slot]
        sets.append(mask)
    return FoldedDomains(sets)


def build_value_graph(folded: FoldedDomains, s: FrozenSet[int], p: int) -> Optional[ValueGraph]:
    """Graph between S plus dummy copies and the slots 1..p; None when |S| > p."""
    if len(s) > p:
        return None
    values = sorted(s)
    left = values + [("dummy", j) for j in range(1, p - len(values) + 1)]
    right = list(range(1, p + 1))
    adjacency: List[List[int]] = []
    for value in values:
        adjacency.append([slot for slot in range(p) if folded.sets[slot] >> value & 1])
    dummy_slots = [slot for slot in range(p) if folded.sets[slot] & DUMMY_BIT]
    for _ in range(p - len(values)):
        adjacency.append(list(dummy_slots))
    return ValueGraph(left, right, adjacency)


class Spacing1Propagator(Propagator):
    """Domain-consistent filtering of Spacing1(S, p, k) over positions 1..n."""

    name = "spacing1"
    idempotent = True

    def __init__(self, spec: Spacing1Spec, variables: Sequence[int]):
        if len(variables) != spec.n:
            raise SpecError(f"expected {spec.n} variables, got {len(variables)}")
        super().__init__(variables)
        self.spec = spec
        self._s_mask = spec.s_mask
        self._warm = WarmMatching()

    def filter(self, ctx: PropagationContext) -> None:
        spec = self.spec
        s_mask = self._s_mask
        xs = self.variables
        p, k = spec.p, spec.k

        for position in range(spec.horizon, spec.n):
            ctx.remove_mask(xs[position], s_mask)

        folded = fold(channel([ctx.mask(x) for x in xs[: spec.horizon]], s_mask), p, k)
        if folded.failed:
            raise DomainWipeout(xs[0])

        graph = build_value_graph(folded, spec.s, p)
        if graph is None:
            raise DomainWipeout(xs[0])
        matching = self._warm.solve(graph)
        if not matching.covers_left():
            raise DomainWipeout(xs[0])

        unsupported = regin_filter(graph, matching)
        supported = [0] * p
        for u, slot in graph.edges():
            if (u, slot) in unsupported:
                continue
            label = graph.left[u]
            supported[slot] |= DUMMY_BIT if isinstance(label, tuple) else 1 << label

        for slot in range(p):
            keep = unchannel(supported[slot], s_mask)
            for j in range(k):
                ctx.intersect(xs[j * p + slot], keep)
