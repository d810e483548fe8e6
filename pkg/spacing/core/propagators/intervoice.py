"""
Inter-voice blocking rule for two Spacing1 constraints on the same sequence.

Placing a value of voice l1 at slot i occupies k_l1 positions, which blocks
the period slots of voice l2 they fall on. If fewer free slots than |S_l2|
would remain, no value of S_l1 can go to slot i. The rule is sound but
incomplete, and it assumes both Spacing1 constraints are at their own fixpoint,
so it runs at a lower priority than they do.
"""

from typing import List, Sequence, Tuple

from spacing.core.propagators.spacing1 import Spacing1Spec
from spacing.core.solver.propagator import PropagationContext, Propagator, Status
from spacing.utils.errors import SpecError


def intervoice_counts(
    ctx: PropagationContext,
    variables: Sequence[int],
    first: Spacing1Spec,
    second: Spacing1Spec,
) -> Tuple[int, List[int]]:
    """Return ``(u, b)``: feasible slots of the second voice, and per slot of
    the first voice how many of those it would block."""
    s2 = second.s_mask
    p2, k2 = second.p, second.k

    u = 0
    for slot in range(p2):
        common = s2
        for j in range(k2):
            common &= ctx.mask(variables[j * p2 + slot])
        if common:
            u += 1

    blocked = []
    limit = k2 * p2
    for i in range(1, first.p + 1):
        slots = set()
        for j in range(first.k):
            position = i + j * first.p
            if position > limit:
                continue
            x = (position - 1) % p2 + 1
            if ctx.mask(variables[x - 1]) & s2:
                slots.add(x)
        blocked.append(len(slots))
    return u, blocked


class InterVoicePropagator(Propagator):
    """The blocking rule for one ordered voice pair (first, second)."""

    name = "intervoice"
    priority = 1

    def __init__(self, first: Spacing1Spec, second: Spacing1Spec, variables: Sequence[int]):
        if first.s & second.s:
            raise SpecError("voices must use disjoint value sets")
        if first.n != second.n or len(variables) != first.n:
            raise SpecError("both voices must span the same sequence")
        super().__init__(variables)
        self.first = first
        self.second = second

    def filter(self, ctx: PropagationContext) -> None:
        u, blocked = intervoice_counts(ctx, self.variables, self.first, self.second)
        threshold = u - len(self.second.s)
        s1 = self.first.s_mask
        p1 = self.first.p
        for i, b in enumerate(blocked):
            if b > threshold:
                for j in range(self.first.k):
                    ctx.remove_mask(self.variables[i + j * p1], s1)


def intervoice_prune(ctx: PropagationContext, propagators: Sequence[InterVoicePropagator]) -> Status:
    """Apply the rule once for every ordered pair in ``propagators``."""
    for propagator in propagators:
        if propagator.propagate(ctx) is Status.FAILED:
            return Status.FAILED
    return Status.CONSISTENT


def voice_pairs(specs: Sequence[Spacing1Spec], variables: Sequence[int]) -> List[InterVoicePropagator]:
    """One rule instance per ordered pair of distinct voices."""
    return [
        InterVoicePropagator(first, second, variables)
        for a, first in enumerate(specs)
        for b, second in enumerate(specs)
        if a != b
    ]
