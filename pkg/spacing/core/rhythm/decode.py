"""Turning model assignments into per-voice beat patterns, and back."""

from typing import Dict, FrozenSet, List, Sequence, Union

from spacing.core.oracle import check_spacing_h, check_spacing_sb
from spacing.core.rhythm.instance import RhythmInstance
from spacing.core.rhythm.models import ModelKind, om_layout
from spacing.core.solver import Domain, mask_of
from spacing.utils.constants import VALUES
from spacing.utils.errors import DecodeError

# Beat (1..p_l) to value id, one dict per voice.
Patterns = List[Dict[int, int]]


def _representatives(instance: RhythmInstance) -> List[int]:
    return [instance.onsets(l)[0] if voice.m else VALUES.DUMMY for l, voice in enumerate(instance.voices)]


def decode(assignment: Sequence[int], instance: RhythmInstance, kind: ModelKind) -> Patterns:
    kind = ModelKind(kind)
    if kind is ModelKind.OM:
        return _decode_onsets(assignment, instance)

    if len(assignment) != instance.n:
        raise DecodeError(f"expected {instance.n} values, got {len(assignment)}")
    patterns: Patterns = []
    for l, voice in enumerate(instance.voices):
        if kind is ModelKind.SB:
            wanted = {_representatives(instance)[l]} - {VALUES.DUMMY}
        else:
            wanted = set(instance.onsets(l))
        patterns.append({i: assignment[i - 1] for i in range(1, voice.p + 1) if assignment[i - 1] in wanted})
    return patterns


def _decode_onsets(assignment: Sequence[int], instance: RhythmInstance) -> Patterns:
    layout = om_layout(instance)
    if len(assignment) != len(layout):
        raise DecodeError(f"expected {len(layout)} onset times, got {len(assignment)}")
    patterns: Patterns = [{} for _ in instance.voices]
    for (l, d), beat in zip(layout, assignment):
        if not 1 <= beat <= instance.voices[l].p:
            raise DecodeError(f"onset {d} of voice {l + 1} placed at beat {beat}, outside 1..{instance.voices[l].p}")
        if beat in patterns[l]:
            raise DecodeError(f"voice {l + 1} plays two onsets at beat {beat}")
        patterns[l][beat] = d
    return patterns


def expand(patterns: Patterns, instance: RhythmInstance) -> List[int]:
    """The full sequence X_1..X_n that repeats every voice pattern k_l times."""
    sequence = [VALUES.DUMMY] * instance.n
    for voice, pattern in zip(instance.voices, patterns):
        for beat, value in pattern.items():
            for j in range(voice.k):
                position = beat + j * voice.p
                if sequence[position - 1] != VALUES.DUMMY:
                    raise DecodeError(f"two voices sound at position {position}")
                sequence[position - 1] = value
    return sequence


def verify(patterns: Patterns, instance: RhythmInstance, kind: ModelKind) -> bool:
    """Re-check decoded patterns against the reference semantics, removals included."""
    try:
        sequence = expand(patterns, instance)
    except DecodeError:
        return False
    removed = instance.removed_at()
    if ModelKind(kind) is ModelKind.SB:
        for d, voice in zip(_representatives(instance), instance.voices):
            if d != VALUES.DUMMY and not check_spacing_sb(sequence, d, voice.m, voice.p, voice.k):
                return False
        voice_of = instance.voice_of()
        for position, value in enumerate(sequence, start=1):
            gone = removed.get(position, set())
            if value == VALUES.DUMMY:
                if value in gone:
                    return False
            elif set(instance.onsets(voice_of[value])) <= gone:
                return False
        return True

    voices = [(instance.onsets(l), voice.p, voice.k) for l, voice in enumerate(instance.voices)]
    if not check_spacing_h(sequence, voices):
        return False
    return all(value not in removed.get(position, ()) for position, value in enumerate(sequence, start=1))


def map_sm_to_om(sm_domains: Sequence[Union[int, Domain, Sequence[int]]], instance: RhythmInstance) -> List[FrozenSet[int]]:
    """OM domains read off SM domains: i in D(V_{l,d}) iff d in D(X_i), i <= p_l."""
    masks = [
        domain if isinstance(domain, int) else domain.mask if isinstance(domain, Domain) else mask_of(domain)
        for domain in sm_domains
    ]
    if len(masks) != instance.n:
        raise DecodeError(f"expected {instance.n} sequence domains, got {len(masks)}")
    return [
        frozenset(i for i in range(1, instance.voices[l].p + 1) if masks[i - 1] >> d & 1)
        for l, d in om_layout(instance)
    ]
