"""
Spacing_SB propagator: one value d occurs in exactly m positions of the
first period, and the pattern repeats k times.

Counting over the folded slots gives domain consistency in linear time:
u counts slots that may hold d, v counts slots that must hold d.
"""

from dataclasses import dataclass
from typing import Sequence

from spacing.core.solver.propagator import DomainWipeout, PropagationContext, Propagator
from spacing.utils.constants import VALUES
from spacing.utils.errors import SpecError


@dataclass(frozen=True)
class SbSpec:
    d: int
    m: int
    p: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.d == VALUES.DUMMY:
            raise SpecError("d cannot be the dummy value")
        if self.p < 1 or self.k < 1 or self.p * self.k > self.n:
            raise SpecError(f"invalid period layout p={self.p}, k={self.k}, n={self.n}")
        if not 0 <= self.m <= self.p:
            raise SpecError(f"m={self.m} must lie in 0..p")


class SpacingSbPropagator(Propagator):
    name = "spacing_sb"
    idempotent = True

    def __init__(self, spec: SbSpec, variables: Sequence[int]):
        if len(variables) != spec.n:
            raise SpecError(f"expected {spec.n} variables, got {len(variables)}")
        super().__init__(variables)
        self.spec = spec

    def filter(self, ctx: PropagationContext) -> None:
        spec = self.spec
        xs = self.variables
        d_bit = 1 << spec.d
        p, k = spec.p, spec.k

        for position in range(p * k, spec.n):
            ctx.remove_mask(xs[position], d_bit)

        # Per slot: may hold d / may hold something else, over all k copies.
        may_d = []
        may_other = []
        for slot in range(p):
            has_d = True
            has_other = True
            for j in range(k):
                mask = ctx.mask(xs[j * p + slot])
                has_d = has_d and bool(mask & d_bit)
                has_other = has_other and bool(mask & ~d_bit)
            if not has_d and not has_other:
                raise DomainWipeout(xs[slot])
            may_d.append(has_d)
            may_other.append(has_other)

        u = sum(may_d)
        v = sum(1 for slot in range(p) if may_d[slot] and not may_other[slot])
        if u < spec.m or v > spec.m:
            raise DomainWipeout(xs[0])

        for slot in range(p):
            if not may_d[slot]:
                keep = ~d_bit
            elif not may_other[slot] or u == spec.m:
                keep = d_bit
            elif v == spec.m:
                keep = ~d_bit
            else:
                continue
            for j in range(k):
                ctx.intersect(xs[j * p + slot], keep)
