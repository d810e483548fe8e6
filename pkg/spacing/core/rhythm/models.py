"""
The four Asynchronous Rhythms models.

OM   one variable V_{l,d} in 1..p_l per onset; AllDifferent per voice plus
     offset disequalities between the repeated copies of different voices.
SM   X_1..X_n over onset ids and 0; one Spacing1 per voice.
SB   X_1..X_n over one representative value per voice and 0; one Spacing_SB
     per voice, onsets of a voice are interchangeable.
SR   SM plus the inter-voice blocking rule for every ordered voice pair.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import structlog

from spacing.core.propagators import (
    AllDifferentPropagator,
    NeqOffsetPropagator,
    SbSpec,
    Spacing1Propagator,
    Spacing1Spec,
    SpacingSbPropagator,
    voice_pairs,
)
from spacing.core.rhythm.instance import RhythmInstance
from spacing.core.solver import (
    Heuristic,
    Propagator,
    SearchLimits,
    SearchOutcome,
    Status,
    ValueOrder,
    VariableStore,
    VarOrder,
    mask_of,
    propagate_fixpoint,
    search,
)
from spacing.utils.constants import VALUES

logger = structlog.get_logger(__name__)

DUMMY_BIT = 1 << VALUES.DUMMY


class ModelKind(str, Enum):
    OM = "om"
    SM = "sm"
    SB = "sb"
    SR = "sr"


@dataclass
class Model:
    """A built model: variable layout, initial domain masks and propagators.

    ``layout`` names every variable: ``(voice, onset)`` for OM, ``(0, position)``
    for the sequence models. ``representatives`` holds d_l per voice for SB.
    """
    kind: ModelKind
    instance: RhythmInstance
    layout: List[Tuple[int, int]]
    domains: List[int]
    propagators: List[Propagator]
    preferred: int = 0
    representatives: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.domains)

    @property
    def has_empty_domain(self) -> bool:
        return any(mask == 0 for mask in self.domains)

    def new_store(self) -> VariableStore:
        return VariableStore(self.domains)

    def heuristic(self, var_order: VarOrder = VarOrder.FIRST_FAIL) -> Heuristic:
        value_order = ValueOrder.ASCENDING if self.kind is ModelKind.OM else ValueOrder.S_FIRST
        return Heuristic(var_order=VarOrder(var_order), value_order=value_order, preferred=self.preferred)


# =============================================================================
# Builders
# =============================================================================

def om_layout(instance: RhythmInstance) -> List[Tuple[int, int]]:
    return [(l, d) for l in range(instance.h) for d in instance.onsets(l)]


def _windows_overlap(start_a: int, p_a: int, start_b: int, p_b: int) -> bool:
    return start_a < start_b + p_b and start_b < start_a + p_a


def build_om(instance: RhythmInstance, skip_disjoint: bool = False) -> Model:
    """Onset model.

    With ``skip_disjoint`` the disequalities whose two period windows never
    intersect are left out; they cannot prune and cannot be violated.
    """
    layout = om_layout(instance)
    index = {pair: var for var, pair in enumerate(layout)}
    voice_of = instance.voice_of()

    domains = []
    for l, d in layout:
        domains.append(mask_of(range(1, instance.voices[l].p + 1)))
    for position, value in instance.removed:
        if value == VALUES.DUMMY:
            continue
        l = voice_of[value]
        voice = instance.voices[l]
        if position <= voice.span:
            domains[index[(l, value)]] &= ~(1 << ((position - 1) % voice.p + 1))

    propagators: List[Propagator] = []
    for l in range(instance.h):
        variables = [index[(l, d)] for d in instance.onsets(l)]
        if variables:
            propagators.append(AllDifferentPropagator(variables))

    for l1 in range(instance.h):
        for l2 in range(l1 + 1, instance.h):
            v1, v2 = instance.voices[l1], instance.voices[l2]
            for d1 in instance.onsets(l1):
                for d2 in instance.onsets(l2):
                    for j1 in range(v1.k):
                        for j2 in range(v2.k):
                            if skip_disjoint and not _windows_overlap(j1 * v1.p, v1.p, j2 * v2.p, v2.p):
                                continue
                            propagators.append(
                                NeqOffsetPropagator(index[(l1, d1)], j1 * v1.p, index[(l2, d2)], j2 * v2.p)
                            )

    return Model(ModelKind.OM, instance, layout, domains, propagators)


def _sequence_masks(instance: RhythmInstance) -> List[int]:
    return [mask_of(domain) for domain in instance.sequence_domains()]


def spacing1_specs(instance: RhythmInstance) -> List[Spacing1Spec]:
    return [
        Spacing1Spec(frozenset(instance.onsets(l)), voice.p, voice.k, instance.n)
        for l, voice in enumerate(instance.voices)
    ]


def build_sm(instance: RhythmInstance) -> Model:
    variables = list(range(instance.n))
    propagators: List[Propagator] = [Spacing1Propagator(spec, variables) for spec in spacing1_specs(instance)]
    return Model(
        ModelKind.SM,
        instance,
        [(0, position) for position in range(1, instance.n + 1)],
        _sequence_masks(instance),
        propagators,
        preferred=mask_of(range(1, instance.value_count + 1)),
    )


def build_sr(instance: RhythmInstance) -> Model:
    model = build_sm(instance)
    model.kind = ModelKind.SR
    if instance.h >= 2:
        model.propagators.extend(voice_pairs(spacing1_specs(instance), list(range(instance.n))))
    return model


def build_sb(instance: RhythmInstance) -> Model:
    """Symmetry-broken model; voice l is represented by its smallest onset id.

    d_l leaves D(X_x) only when every onset of voice l is removed at x.
    """
    representatives = tuple(instance.onsets(l)[0] if instance.voices[l].m else VALUES.DUMMY for l in range(instance.h))
    removed = instance.removed_at()

    domains = []
    for position in range(1, instance.n + 1):
        gone = removed.get(position, set())
        mask = 0 if VALUES.DUMMY in gone else DUMMY_BIT
        for l, d in enumerate(representatives):
            if d != VALUES.DUMMY and not set(instance.onsets(l)) <= gone:
                mask |= 1 << d
        domains.append(mask)

    variables = list(range(instance.n))
    propagators: List[Propagator] = [
        SpacingSbPropagator(SbSpec(d, voice.m, voice.p, voice.k, instance.n), variables)
        for d, voice in zip(representatives, instance.voices)
        if d != VALUES.DUMMY
    ]
    return Model(
        ModelKind.SB,
        instance,
        [(0, position) for position in range(1, instance.n + 1)],
        domains,
        propagators,
        preferred=mask_of(d for d in representatives if d != VALUES.DUMMY),
        representatives=representatives,
    )


BUILDERS = {
    ModelKind.OM: build_om,
    ModelKind.SM: build_sm,
    ModelKind.SB: build_sb,
    ModelKind.SR: build_sr,
}


def build_model(instance: RhythmInstance, kind: ModelKind) -> Model:
    return BUILDERS[ModelKind(kind)](instance)


# =============================================================================
# Running a model
# =============================================================================

def root_fixpoint(model: Model) -> Tuple[Status, Optional[List[int]]]:
    """Propagate the initial domains once; the masks are None on failure."""
    if model.has_empty_domain:
        return Status.FAILED, None
    store = model.new_store()
    status = propagate_fixpoint(store, model.propagators)
    if status is Status.FAILED:
        return status, None
    return status, list(store.snapshot())


def solve_model(
    model: Model,
    heuristic: Optional[Heuristic] = None,
    limits: Optional[SearchLimits] = None,
) -> SearchOutcome:
    if model.has_empty_domain:
        logger.debug("Model has an empty initial domain", model=model.kind.value)
        return SearchOutcome(nodes=1)
    return search(model.new_store(), model.propagators, heuristic or model.heuristic(), limits)


def model_stats(model: Model) -> Dict[str, int]:
    return {
        "variables": model.size,
        "propagators": len(model.propagators),
        "values": sum(mask.bit_count() for mask in model.domains),
    }
