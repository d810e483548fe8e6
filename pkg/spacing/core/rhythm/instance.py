"""
Asynchronous Rhythms instances and their JSON file format.

An instance has h voices. Voice l plays m_l onsets inside a period of p_l
beats, repeated exactly k_l times over a sequence of n beats. Onset ids are
consecutive per voice: voice 1 uses 1..m_1, voice 2 continues at m_1 + 1,
and 0 means "no onset". ``removed`` lists forbidden (beat, value) pairs.

File format::

    {"voices": [{"p": 5, "k": 3, "m": 3}], "n": 15, "removed": [[1, 3]], "seed": 7}
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

import orjson
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from spacing.utils.constants import VALUES
from spacing.utils.errors import InstanceFormatError

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


class Voice(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    k: int
    m: int

    @model_validator(mode="after")
    def _check(self) -> "Voice":
        if self.p < 1 or self.k < 1:
            raise ValueError(f"p and k must be positive (p={self.p}, k={self.k})")
        if not 0 <= self.m <= self.p:
            raise ValueError(f"m={self.m} must lie in 0..p={self.p}")
        return self

    @property
    def span(self) -> int:
        return self.p * self.k


class RhythmInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    voices: Tuple[Voice, ...]
    n: int
    removed: Tuple[Tuple[int, int], ...] = ()
    seed: Optional[int] = None

    @field_validator("removed")
    @classmethod
    def _sorted_pairs(cls, value: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(set(tuple(pair) for pair in value)))

    @model_validator(mode="after")
    def _check(self) -> "RhythmInstance":
        if not self.voices:
            raise ValueError("an instance needs at least one voice")
        spans = [voice.span for voice in self.voices]
        if self.n != max(spans):
            raise ValueError(f"n={self.n} must equal the longest voice span {max(spans)}")
        top = sum(voice.m for voice in self.voices)
        for position, value in self.removed:
            if not 1 <= position <= self.n or not 0 <= value <= top:
                raise ValueError(f"removed pair ({position}, {value}) is out of range")
        return self

    @property
    def h(self) -> int:
        return len(self.voices)

    def onsets(self, voice: int) -> Tuple[int, ...]:
        """Onset value ids of voice ``voice`` (0-based index)."""
        start = sum(v.m for v in self.voices[:voice]) + 1
        return tuple(range(start, start + self.voices[voice].m))

    @property
    def value_count(self) -> int:
        return sum(voice.m for voice in self.voices)

    def voice_of(self) -> Dict[int, int]:
        """Map onset id to 0-based voice index."""
        return {d: l for l in range(self.h) for d in self.onsets(l)}

    def removed_at(self) -> Dict[int, set]:
        table: Dict[int, set] = {}
        for position, value in self.removed:
            table.setdefault(position, set()).add(value)
        return table

    def sequence_domains(self) -> List[List[int]]:
        """Initial per-beat domains of the X-based models, positions 1..n."""
        removed = self.removed_at()
        everything = list(range(VALUES.DUMMY, self.value_count + 1))
        return [[v for v in everything if v not in removed.get(position, ())] for position in range(1, self.n + 1)]

    def summary(self) -> str:
        parts = [f"n={self.n}"]
        for l, voice in enumerate(self.voices, start=1):
            parts.append(f"voice{l}: p={voice.p} k={voice.k} m={voice.m}")
        if self.removed:
            parts.append(f"removed={len(self.removed)}")
        return "  ".join(parts)

    # =========================================================================
    # JSON
    # =========================================================================

    def to_json(self) -> bytes:
        payload = {
            "voices": [{"p": v.p, "k": v.k, "m": v.m} for v in self.voices],
            "n": self.n,
            "removed": [list(pair) for pair in self.removed],
            "seed": self.seed,
        }
        return orjson.dumps(payload, option=JSON_OPTIONS)

    @classmethod
    def from_json(cls, data: bytes) -> "RhythmInstance":
        try:
            payload = orjson.loads(data)
        except orjson.JSONDecodeError as e:
            raise InstanceFormatError(f"invalid JSON: {e}") from e
        return cls.from_payload(payload)

    @classmethod
    def from_payload(cls, payload: dict) -> "RhythmInstance":
        if not isinstance(payload, dict) or "voices" not in payload or "n" not in payload:
            raise InstanceFormatError("an instance needs 'voices' and 'n'")
        try:
            return cls(
                voices=tuple(Voice(**voice) for voice in payload["voices"]),
                n=payload["n"],
                removed=tuple(tuple(pair) for pair in payload.get("removed", [])),
                seed=payload.get("seed"),
            )
        except (ValidationError, TypeError, ValueError) as e:
            raise InstanceFormatError(f"invalid instance: {e}") from e


def load_instance(path: Path) -> RhythmInstance:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InstanceFormatError(f"cannot read {path}: {e}") from e
    return RhythmInstance.from_json(data)


def save_instance(instance: RhythmInstance, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(instance.to_json())
