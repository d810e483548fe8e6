"""Constraint filtering algorithms."""

from spacing.core.propagators.alldifferent import AllDifferentPropagator
from spacing.core.propagators.arithmetic import NeqOffsetPropagator
from spacing.core.propagators.bounded import (
    BoundedSpacingPropagator,
    BoundedSpacingSpec,
    LayeredGraph,
    SpacingDecomposition,
    bounded_s_build,
    bounded_s_supports,
)
from spacing.core.propagators.intervoice import (
    InterVoicePropagator,
    intervoice_counts,
    intervoice_prune,
    voice_pairs,
)
from spacing.core.propagators.matching import Matching, ValueGraph, maximum_matching, regin_filter
from spacing.core.propagators.spacing1 import (
    FoldedDomains,
    Spacing1Propagator,
    Spacing1Spec,
    build_value_graph,
    channel,
    fold,
)
from spacing.core.propagators.spacing_sb import SbSpec, SpacingSbPropagator

__all__ = [
    "AllDifferentPropagator",
    "BoundedSpacingPropagator",
    "BoundedSpacingSpec",
    "FoldedDomains",
    "InterVoicePropagator",
    "LayeredGraph",
    "Matching",
    "NeqOffsetPropagator",
    "SbSpec",
    "Spacing1Propagator",
    "Spacing1Spec",
    "SpacingDecomposition",
    "SpacingSbPropagator",
    "ValueGraph",
    "bounded_s_build",
    "bounded_s_supports",
    "build_value_graph",
    "channel",
    "fold",
    "intervoice_counts",
    "intervoice_prune",
    "maximum_matching",
    "regin_filter",
    "voice_pairs",
]
