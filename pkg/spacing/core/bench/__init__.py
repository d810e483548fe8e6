"""Benchmark harness and oracle check suites."""

from spacing.core.bench.checks import SUITES, CheckOptions, CheckResult, run_suite
from spacing.core.bench.report import render, render_csv, render_json, save_report, summary_lines, write_csv
from spacing.core.bench.runner import (
    BenchReport,
    BenchRunner,
    CellResult,
    InstanceRecord,
    instance_seeds,
    run_cell,
    summarize,
)

__all__ = [
    "SUITES",
    "BenchReport",
    "BenchRunner",
    "CellResult",
    "CheckOptions",
    "CheckResult",
    "InstanceRecord",
    "instance_seeds",
    "render",
    "render_csv",
    "render_json",
    "run_cell",
    "run_suite",
    "save_report",
    "summarize",
    "summary_lines",
    "write_csv",
]
