"""Asynchronous Rhythms: instances, the random generator and the four models."""

from spacing.core.rhythm.decode import decode, expand, map_sm_to_om, verify
from spacing.core.rhythm.generator import OnsetBasis, extend_instance, generate_instance, split_onsets
from spacing.core.rhythm.instance import RhythmInstance, Voice, load_instance, save_instance
from spacing.core.rhythm.models import (
    Model,
    ModelKind,
    build_model,
    build_om,
    build_sb,
    build_sm,
    build_sr,
    model_stats,
    root_fixpoint,
    solve_model,
)

__all__ = [
    "Model",
    "ModelKind",
    "OnsetBasis",
    "RhythmInstance",
    "Voice",
    "build_model",
    "build_om",
    "build_sb",
    "build_sm",
    "build_sr",
    "decode",
    "expand",
    "extend_instance",
    "generate_instance",
    "load_instance",
    "map_sm_to_om",
    "model_stats",
    "root_fixpoint",
    "save_instance",
    "solve_model",
    "split_onsets",
    "verify",
]
