"""
Automaton propagator for Spacing(S, A, B) with a small value set S.

A state records, for every d in S, how many occurrences were seen (capped at
k) and how many positions passed since the last one. The reachable states
form a layered graph over positions 0..n; a value survives at position i iff
it labels an edge on some path from the initial state to an accepting one.
The state count grows as n^|S|, so the joint automaton is capped; for larger
S the constraint splits into one single-value automaton per d.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from spacing.core.solver.domain import iter_bits, mask_of
from spacing.core.solver.propagator import DomainWipeout, PropagationContext, Propagator
from spacing.utils.config import get_settings
from spacing.utils.errors import OversizeError, SpecError

# Edge label standing for "any value outside S".
OTHER = -1
# Bit 0 is the dummy value, which lies outside S, so it doubles as the OTHER flag in support masks.
OTHER_FLAG = 1

State = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class BoundedSpacingSpec:
    s: FrozenSet[int]
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    k: int
    n: int
    forced: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise SpecError("k must be positive")
        if len(self.a) != self.k - 1 or len(self.b) != self.k - 1:
            raise SpecError(f"A and B need k-1 = {self.k - 1} entries")
        if 0 in self.s:
            raise SpecError("the dummy value 0 cannot belong to S")
        for low, high in zip(self.a, self.b):
            if not 1 <= low <= high:
                raise SpecError(f"distance bounds must satisfy 1 <= a <= b, got ({low}, {high})")

    @property
    def s_mask(self) -> int:
        return mask_of(self.s)


@dataclass
class LayeredGraph:
    """``layers[i]`` maps every state reachable after i positions to its
    outgoing edges ``(label, next_state)`` consuming position i + 1."""
    values: Tuple[int, ...]
    layers: List[Dict[State, List[Tuple[int, State]]]]
    accepting: List[State]

    @property
    def state_count(self) -> int:
        return sum(len(layer) for layer in self.layers)


def _step(spec: BoundedSpacingSpec, component: Tuple[int, int], hit: bool) -> Optional[Tuple[int, int]]:
    """Advance one value's (occurrences, gap) pair; None is a dead state."""
    t, gap = component
    k = spec.k
    if hit:
        if t == 0:
            return (min(1, k), 0)
        if t >= k:
            return (k, 0)
        distance = gap + 1
        if distance < spec.a[t - 1] or distance > spec.b[t - 1]:
            return None
        return (t + 1, 0)
    if 1 <= t < k:
        gap += 1
        if gap >= spec.b[t - 1]:
            return None
        return (t, gap)
    return component


def _accepts(spec: BoundedSpacingSpec, state: State) -> bool:
    if spec.forced:
        return all(t >= spec.k for t, _ in state)
    return all(t == 0 or t >= spec.k for t, _ in state)


def bounded_s_build(spec: BoundedSpacingSpec, domains: Sequence[int], cap: Optional[int] = None) -> LayeredGraph:
    """Forward-reachable layered graph over the current domain masks."""
    cap = get_settings().bounded_s_cap if cap is None else cap
    if len(spec.s) > cap:
        raise OversizeError(f"|S| = {len(spec.s)} exceeds the automaton cap {cap}")
    if len(domains) != spec.n:
        raise SpecError(f"expected {spec.n} domains, got {len(domains)}")

    values = tuple(sorted(spec.s))
    s_mask = spec.s_mask
    initial: State = tuple((0, 0) for _ in values)
    layers: List[Dict[State, List[Tuple[int, State]]]] = []
    frontier = [initial]

    for mask in domains:
        labels = list(iter_bits(mask & s_mask))
        if mask & ~s_mask:
            labels.append(OTHER)
        layer: Dict[State, List[Tuple[int, State]]] = {}
        following: Dict[State, None] = {}
        for state in frontier:
            edges = []
            for label in labels:
                successor = []
                for value, component in zip(values, state):
                    moved = _step(spec, component, value == label)
                    if moved is None:
                        break
                    successor.append(moved)
                else:
                    nxt = tuple(successor)
                    edges.append((label, nxt))
                    following[nxt] = None
            layer[state] = edges
        layers.append(layer)
        frontier = list(following)

    accepting = [state for state in frontier if _accepts(spec, state)]
    return LayeredGraph(values, layers, accepting)


def bounded_s_supports(spec: BoundedSpacingSpec, graph: LayeredGraph) -> Optional[List[int]]:
    """Backward pass: per position, the mask of labels on accepted paths.

    Returns None when no accepting state is reachable.
    """
    alive = set(graph.accepting)
    if not alive:
        return None
    supported: List[int] = [0] * len(graph.layers)
    for position in range(len(graph.layers) - 1, -1, -1):
        previous = set()
        labels = 0
        for state, edges in graph.layers[position].items():
            for label, nxt in edges:
                if nxt in alive:
                    previous.add(state)
                    labels |= OTHER_FLAG if label == OTHER else 1 << label
        supported[position] = labels
        alive = previous
    return supported


class BoundedSpacingPropagator(Propagator):
    """Domain consistency for Spacing (or Spacing_F when ``forced``) with small S."""

    name = "bounded_s"
    idempotent = True

    def __init__(self, spec: BoundedSpacingSpec, variables: Sequence[int], cap: Optional[int] = None):
        if len(variables) != spec.n:
            raise SpecError(f"expected {spec.n} variables, got {len(variables)}")
        cap = get_settings().bounded_s_cap if cap is None else cap
        if len(spec.s) > cap:
            raise OversizeError(f"|S| = {len(spec.s)} exceeds the automaton cap {cap}")
        super().__init__(variables)
        self.spec = spec
        self.cap = cap

    def filter(self, ctx: PropagationContext) -> None:
        spec = self.spec
        s_mask = spec.s_mask
        masks = [ctx.mask(x) for x in self.variables]
        graph = bounded_s_build(spec, masks, self.cap)
        supported = bounded_s_supports(spec, graph)
        if supported is None:
            raise DomainWipeout(self.variables[0])
        for var, labels in zip(self.variables, supported):
            keep = labels & s_mask
            if labels & OTHER_FLAG:
                keep |= ~s_mask
            ctx.intersect(var, keep)


class SpacingDecomposition(Propagator):
    """Spacing as a conjunction of single-value automata, one per d in S.

    Each d is constrained independently by the definition, so this is the
    same constraint; filtering is domain consistent per value only.
    """

    name = "spacing_decomposed"

    def __init__(self, spec: BoundedSpacingSpec, variables: Sequence[int]):
        if len(variables) != spec.n:
            raise SpecError(f"expected {spec.n} variables, got {len(variables)}")
        super().__init__(variables)
        self.spec = spec
        self.parts = [
            BoundedSpacingPropagator(
                BoundedSpacingSpec(frozenset([d]), spec.a, spec.b, spec.k, spec.n, spec.forced),
                variables,
                cap=1,
            )
            for d in sorted(spec.s)
        ]

    def filter(self, ctx: PropagationContext) -> None:
        for part in self.parts:
            part.filter(ctx)
