"""spacing utilities module."""

from spacing.utils.config import (
    BenchConfig,
    Settings,
    get_settings,
    load_bench_config,
    merge_bench_config,
    reload_settings,
    save_bench_config,
)

__all__ = [
    "BenchConfig",
    "Settings",
    "get_settings",
    "load_bench_config",
    "merge_bench_config",
    "reload_settings",
    "save_bench_config",
]
