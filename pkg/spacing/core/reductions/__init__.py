"""SAT reductions to the Spacing constraint family."""

from spacing.core.reductions.cnf import Cnf, brute_sat, find_model, load_dimacs, parse_dimacs
from spacing.core.reductions.encoders import (
    ReducedInstance,
    ReducedVoice,
    ReductionKind,
    indexed_id,
    lit_id,
    literal_of,
    load_reduced,
    primed_id,
    reduce,
    reduce_spacing,
    reduce_spacing_f,
    reduce_spacing_f_nomax,
    reduce_spacing_h,
    save_reduced,
    spacing_h_periods,
    value_labels,
)
from spacing.core.reductions.solve import ReductionResult, extract_model, reduced_propagators, solve_reduced

__all__ = [
    "Cnf",
    "ReducedInstance",
    "ReducedVoice",
    "ReductionKind",
    "ReductionResult",
    "brute_sat",
    "extract_model",
    "find_model",
    "indexed_id",
    "lit_id",
    "literal_of",
    "load_dimacs",
    "load_reduced",
    "parse_dimacs",
    "primed_id",
    "reduce",
    "reduce_spacing",
    "reduce_spacing_f",
    "reduce_spacing_f_nomax",
    "reduce_spacing_h",
    "reduced_propagators",
    "save_reduced",
    "solve_reduced",
    "spacing_h_periods",
    "value_labels",
]
