"""CSV and JSON output for bench reports."""

import csv
import io
from pathlib import Path
from typing import List, TextIO

import orjson

from spacing.core.bench.runner import BenchReport
from spacing.utils.constants import BENCH


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def write_csv(report: BenchReport, stream: TextIO) -> None:
    """One row per (h, p1, kh, model); means are blank when nothing was solved."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BENCH.CSV_COLUMNS)
    for result in report.cells:
        row = result.model_dump()
        writer.writerow([_cell(row[column]) for column in BENCH.CSV_COLUMNS])


def render_csv(report: BenchReport) -> str:
    buffer = io.StringIO()
    write_csv(report, buffer)
    return buffer.getvalue()


def render_json(report: BenchReport) -> bytes:
    return orjson.dumps(report.model_dump(mode="json"), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)


def save_report(report: BenchReport, path: Path, fmt: str = "csv") -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path.write_bytes(render_json(report))
    else:
        path.write_text(render_csv(report))


def render(report: BenchReport, fmt: str = "csv") -> str:
    return render_json(report).decode() if fmt == "json" else render_csv(report)


def summary_lines(report: BenchReport) -> List[str]:
    lines = []
    if report.sr_violations:
        lines.append(f"SR needed more backtracks than SM on {len(report.sr_violations)} instance(s)")
    for shortfall in report.sb_shortfalls:
        lines.append(
            "SB solved fewer than SM in cell h={h} p1={p1} kh={kh} ({sb} < {sm})".format(**shortfall)
        )
    for skipped in report.skipped:
        lines.append(f"skipped {skipped}")
    return lines
