"""spacing - propagators for the Spacing constraint family."""

from spacing.utils.version import VERSION

__version__ = VERSION
