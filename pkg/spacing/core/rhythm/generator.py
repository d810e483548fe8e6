"""
Seeded random generator for Asynchronous Rhythms instances.

Randomness comes from numpy's PCG64 bit generator seeded with the integer
seed. A generated instance consumes only the period jitters of voices 2..h;
the onset split is deterministic. Extension draws one permutation of all
(position, value) pairs from a fresh generator on its own seed.
"""

import math
from enum import Enum
from typing import List

import numpy as np
import structlog

from spacing.core.rhythm.instance import RhythmInstance, Voice
from spacing.utils.constants import GENERATOR
from spacing.utils.errors import GenerationError

logger = structlog.get_logger(__name__)


class OnsetBasis(str, Enum):
    PATTERN = "pattern"
    BEATS = "beats"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _jitter(rng: np.random.Generator, spread: int) -> int:
    return int(rng.integers(-spread, spread, endpoint=True))


def draw_periods(rng: np.random.Generator, h: int, p1: int) -> List[int]:
    periods = [p1]
    if h >= 2:
        periods.append(p1 + GENERATOR.SECOND_VOICE_OFFSET + _jitter(rng, GENERATOR.SECOND_VOICE_JITTER))
    for l in range(2, h):
        periods.append(GENERATOR.DOUBLING_FACTOR * periods[l - 2] + _jitter(rng, GENERATOR.DOUBLING_JITTER))
    return periods


def split_onsets(total: int, capacities: List[int]) -> List[int]:
    """Split ``total`` as evenly as possible, remainder to the last voices.

    A share above its capacity is cut, and the excess goes round-robin to
    the voices that still have room, last voice first. Whatever no voice can
    take is dropped.
    """
    h = len(capacities)
    base, remainder = divmod(total, h)
    shares = [base + (1 if l >= h - remainder else 0) for l in range(h)]

    excess = 0
    for l in range(h):
        if shares[l] > capacities[l]:
            excess += shares[l] - capacities[l]
            shares[l] = capacities[l]

    while excess:
        open_voices = [l for l in range(h - 1, -1, -1) if shares[l] < capacities[l]]
        if not open_voices:
            break
        for l in open_voices:
            if not excess:
                break
            shares[l] += 1
            excess -= 1
    return shares


def generate_instance(
    h: int,
    p1: int,
    kh: int,
    seed: int,
    onset_basis: OnsetBasis = OnsetBasis.PATTERN,
) -> RhythmInstance:
    """Random instance with h voices whose last voice repeats kh times."""
    if h < 1 or kh < 1 or p1 < GENERATOR.MIN_P1:
        raise GenerationError(f"need h >= 1, kh >= 1 and p1 >= {GENERATOR.MIN_P1} (got h={h}, p1={p1}, kh={kh})")
    onset_basis = OnsetBasis(onset_basis)

    rng = make_rng(seed)
    periods = draw_periods(rng, h, p1)
    if min(periods) < 1:
        raise GenerationError(f"drawn periods {periods} are not all positive")

    n = periods[-1] * kh
    reps = [n // p for p in periods[:-1]] + [kh]
    if min(reps) < 1:
        raise GenerationError(f"a period exceeds the sequence length n={n} (periods {periods})")

    total = math.floor(GENERATOR.ONSET_DENSITY * n + 0.5)
    if onset_basis is OnsetBasis.PATTERN:
        onsets = split_onsets(total, periods)
    else:
        beats = split_onsets(total, [p * k for p, k in zip(periods, reps)])
        onsets = [min(p, math.floor(share / k + 0.5)) for share, p, k in zip(beats, periods, reps)]

    instance = RhythmInstance(
        voices=tuple(Voice(p=p, k=k, m=m) for p, k, m in zip(periods, reps, onsets)),
        n=n,
        seed=seed,
    )
    logger.debug("Instance generated", h=h, p1=p1, kh=kh, seed=seed, periods=periods, onsets=onsets)
    return instance


def extend_instance(instance: RhythmInstance, fraction: float, seed: int) -> RhythmInstance:
    """Remove a random share of (position, value) pairs, never emptying a domain."""
    if not 0 <= fraction < 1:
        raise GenerationError(f"fraction must lie in [0, 1), got {fraction}")

    domains = instance.sequence_domains()
    pairs = [(position, value) for position, domain in enumerate(domains, start=1) for value in domain]
    budget = math.floor(fraction * len(pairs))
    if budget == 0:
        return instance

    sizes = [len(domain) for domain in domains]
    removed = set(instance.removed)
    taken = 0
    for index in make_rng(seed).permutation(len(pairs)):
        if taken == budget:
            break
        position, value = pairs[int(index)]
        if sizes[position - 1] <= 1:
            continue
        sizes[position - 1] -= 1
        removed.add((position, value))
        taken += 1

    logger.debug("Instance extended", fraction=fraction, seed=seed, removed=taken)
    return instance.model_copy(update={"removed": tuple(sorted(removed))})
