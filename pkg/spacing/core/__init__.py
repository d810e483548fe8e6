"""spacing core modules."""
