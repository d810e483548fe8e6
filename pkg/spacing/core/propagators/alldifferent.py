"""Domain-consistent AllDifferent via the variable-value matching graph."""

from typing import Sequence

from spacing.core.propagators.matching import ValueGraph, WarmMatching, regin_filter
from spacing.core.solver.domain import bits
from spacing.core.solver.propagator import DomainWipeout, PropagationContext, Propagator
from spacing.utils.errors import SpecError


class AllDifferentPropagator(Propagator):
    name = "alldifferent"
    idempotent = True

    def __init__(self, variables: Sequence[int]):
        if not variables:
            raise SpecError("AllDifferent needs at least one variable")
        super().__init__(variables)
        self._warm = WarmMatching()

    def filter(self, ctx: PropagationContext) -> None:
        masks = [ctx.mask(x) for x in self.variables]
        union = 0
        for mask in masks:
            union |= mask
        values = bits(union)
        column = {value: index for index, value in enumerate(values)}
        graph = ValueGraph(
            left=list(self.variables),
            right=values,
            adjacency=[[column[value] for value in bits(mask)] for mask in masks],
        )

        matching = self._warm.solve(graph)
        if not matching.covers_left():
            raise DomainWipeout(self.variables[0])

        removed = [0] * len(self.variables)
        for u, v in regin_filter(graph, matching):
            removed[u] |= 1 << values[v]
        for var, mask in zip(self.variables, removed):
            if mask:
                ctx.remove_mask(var, mask)
