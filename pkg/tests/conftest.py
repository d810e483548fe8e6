"""Shared fixtures: the worked examples the propagators are checked against."""

from typing import List

import pytest

from spacing.core.reductions import Cnf
from spacing.core.rhythm import RhythmInstance, Voice
from spacing.utils.config import reload_settings

# Value ids of the single-voice example: three onsets and one value outside S.
A, B, C, O = 1, 2, 3, 4


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings."""
    for name in ("SPACING_LOG_LEVEL", "SPACING_ENUMERATION_CAP", "SPACING_BOUNDED_S_CAP", "SPACING_BENCH_TIMEOUT"):
        monkeypatch.delenv(name, raising=False)
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def folded_example_domains() -> List[List[int]]:
    """Spacing1({a,b,c}, 5, 3) over 15 positions; the only support is o,a,c,b,o repeated."""
    full = [A, B, C, O]
    return [
        [A, B, O],
        full,
        full,
        [A, B],
        [B, C, O],
        full,
        [A, B, C],
        [C],
        full,
        [B, C, O],
        full,
        [A, C, O],
        full,
        full,
        [B, C, O],
    ]


@pytest.fixture
def strict_instance() -> RhythmInstance:
    """Two voices (m=p=k=2 and m=1, p=3, k=2) with an onset of voice 1 forced at beat 1.

    The sequence model fails at the root; the onset model stays consistent.
    """
    return RhythmInstance(
        voices=(Voice(p=2, k=2, m=2), Voice(p=3, k=2, m=1)),
        n=6,
        removed=((1, 0), (1, 3)),
    )


@pytest.fixture
def two_voice_instance() -> RhythmInstance:
    """Voices ({1,2}, p=5, k=4) and ({3,4}, p=7, k=3) on 21 beats, value 1 fixed at beat 1."""
    return RhythmInstance(
        voices=(Voice(p=5, k=4, m=2), Voice(p=7, k=3, m=2)),
        n=21,
        removed=((1, 0), (1, 2), (1, 3), (1, 4)),
    )


@pytest.fixture
def running_cnf() -> Cnf:
    """(not p or q or r)(not q or r)(not p or not q)(p or q)."""
    return Cnf(3, ((-1, 2, 3), (-2, 3), (-1, -2), (1, 2)))
