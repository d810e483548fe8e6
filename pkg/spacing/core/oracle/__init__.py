"""Ground-truth checkers and brute-force oracles."""

from spacing.core.oracle.brute import count_supports_recursive, dc_oracle, enumerate_supports
from spacing.core.oracle.semantics import (
    SpacingSpec,
    check_spacing,
    check_spacing1,
    check_spacing_f,
    check_spacing_h,
    check_spacing_sb,
    occ,
)

__all__ = [
    "SpacingSpec",
    "check_spacing",
    "check_spacing1",
    "check_spacing_f",
    "check_spacing_h",
    "check_spacing_sb",
    "count_supports_recursive",
    "dc_oracle",
    "enumerate_supports",
    "occ",
]
