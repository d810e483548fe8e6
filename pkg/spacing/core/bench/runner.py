"""Bench Runner - solves the random instance grid under every requested model."""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, Field

from spacing.core.rhythm import (
    ModelKind,
    OnsetBasis,
    build_model,
    build_om,
    extend_instance,
    generate_instance,
    solve_model,
)
from spacing.core.solver import SearchLimits, SearchStatus, VarOrder
from spacing.utils.config import BenchConfig

logger = structlog.get_logger(__name__)

Cell = Tuple[int, int, int]


class InstanceRecord(BaseModel):
    h: int
    p1: int
    kh: int
    index: int
    seed: int
    model: str
    status: str
    nodes: int
    backtracks: int
    time: float


class CellResult(BaseModel):
    h: int
    p1: int
    kh: int
    model: str
    instances: int
    solved: int
    mean_time: Optional[float] = None
    mean_backtracks: Optional[float] = None
    mean_nodes: Optional[float] = None


class BenchReport(BaseModel):
    config: BenchConfig
    cells: List[CellResult] = Field(default_factory=list)
    records: List[InstanceRecord] = Field(default_factory=list)
    # Instances both SM and SR solved where SR needed more backtracks.
    sr_violations: List[Dict[str, int]] = Field(default_factory=list)
    # Cells where SB solved fewer instances than SM.
    sb_shortfalls: List[Dict[str, int]] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)


def instance_seeds(seed: int, cell: Cell, count: int) -> List[int]:
    """Per-instance seeds derived from the run seed and the cell, independent of grid order."""
    sequence = np.random.SeedSequence([seed, *cell])
    return [int(value) for value in sequence.generate_state(count, dtype=np.uint64)]


def _solved(record: InstanceRecord) -> bool:
    return record.status != SearchStatus.TIMEOUT.value


def summarize(cell: Cell, model: str, records: List[InstanceRecord]) -> CellResult:
    solved = [record for record in records if _solved(record)]
    result = CellResult(h=cell[0], p1=cell[1], kh=cell[2], model=model, instances=len(records), solved=len(solved))
    if solved:
        result.mean_time = round(sum(r.time for r in solved) / len(solved), 3)
        result.mean_backtracks = round(sum(r.backtracks for r in solved) / len(solved), 3)
        result.mean_nodes = round(sum(r.nodes for r in solved) / len(solved), 3)
    return result


def run_cell(cell: Cell, config: BenchConfig) -> Tuple[List[CellResult], List[InstanceRecord], List[str]]:
    """Generate and solve one cell; module level so worker processes can run it."""
    h, p1, kh = cell
    extended = config.extended_fraction > 0
    models = [ModelKind(name) for name in config.models]
    skipped: List[str] = []
    if extended and ModelKind.SB in models:
        models.remove(ModelKind.SB)
        skipped.append(f"sb on extended cell ({h}, {p1}, {kh})")
        logger.info("Skipping SB on extended instances", h=h, p1=p1, kh=kh)

    limits = SearchLimits(max_solutions=1, timeout=config.timeout, keep_solutions=False)
    var_order = VarOrder(config.var_order)
    by_model: Dict[ModelKind, List[InstanceRecord]] = {model: [] for model in models}

    for index, seed in enumerate(instance_seeds(config.seed, cell, config.instances)):
        instance = generate_instance(h, p1, kh, seed, OnsetBasis(config.onset_basis))
        if extended:
            instance = extend_instance(instance, config.extended_fraction, seed)

        for kind in models:
            model = build_om(instance, skip_disjoint=True) if kind is ModelKind.OM else build_model(instance, kind)
            outcome = solve_model(model, model.heuristic(var_order), limits)
            by_model[kind].append(
                InstanceRecord(
                    h=h,
                    p1=p1,
                    kh=kh,
                    index=index,
                    seed=seed,
                    model=kind.value,
                    status=outcome.status.value,
                    nodes=outcome.nodes,
                    backtracks=outcome.backtracks,
                    time=round(outcome.wall_time, 3),
                )
            )

    results = [summarize(cell, kind.value, records) for kind, records in by_model.items()]
    records = [record for kind in models for record in by_model[kind]]
    return results, records, skipped


class BenchRunner:
    """Runs a benchmark configuration cell by cell, optionally in a process pool."""

    def __init__(self, config: BenchConfig):
        self.config = config
        self.is_running = False
        self._stats = {
            "cells_completed": 0,
            "instances_solved": 0,
            "instances_timed_out": 0,
        }

    @property
    def stats(self) -> Dict[str, int]:
        return dict(self._stats)

    def run(self) -> BenchReport:
        if self.is_running:
            raise RuntimeError("Bench already running")
        self.is_running = True
        self._stats = {key: 0 for key in self._stats}
        config = self.config
        report = BenchReport(config=config)

        logger.info(
            "Starting bench",
            cells=len(config.grid),
            instances=config.instances,
            models=config.models,
            timeout=config.timeout,
            jobs=config.jobs,
            seed=config.seed,
        )
        try:
            if not config.models:
                return report
            for cell, (results, records, skipped) in zip(config.grid, self._execute()):
                self._record_cell(cell, results, records, report)
                report.skipped.extend(skipped)
            self._check_relations(report)
        finally:
            self.is_running = False

        logger.info(
            "Bench finished",
            sr_violations=len(report.sr_violations),
            sb_shortfalls=len(report.sb_shortfalls),
            **self._stats,
        )
        return report

    def _execute(self):
        cells = [tuple(cell) for cell in self.config.grid]
        if self.config.jobs > 1 and len(cells) > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                yield from pool.map(run_cell, cells, [self.config] * len(cells))
        else:
            for cell in cells:
                yield run_cell(cell, self.config)

    def _record_cell(
        self,
        cell: Cell,
        results: List[CellResult],
        records: List[InstanceRecord],
        report: BenchReport,
    ) -> None:
        report.cells.extend(results)
        report.records.extend(records)
        self._stats["cells_completed"] += 1
        for record in records:
            key = "instances_solved" if _solved(record) else "instances_timed_out"
            self._stats[key] += 1
        h, p1, kh = cell
        logger.info(
            "Cell completed",
            h=h,
            p1=p1,
            kh=kh,
            solved={result.model: result.solved for result in results},
        )

    def _check_relations(self, report: BenchReport) -> None:
        """Record SR > SM backtrack counts and cells where SB solved fewer than SM."""
        by_key: Dict[Tuple[int, int, int, int], Dict[str, InstanceRecord]] = {}
        for record in report.records:
            by_key.setdefault((record.h, record.p1, record.kh, record.index), {})[record.model] = record

        for (h, p1, kh, index), models in by_key.items():
            sm, sr = models.get("sm"), models.get("sr")
            if sm and sr and _solved(sm) and _solved(sr) and sr.backtracks > sm.backtracks:
                report.sr_violations.append(
                    {"h": h, "p1": p1, "kh": kh, "index": index, "sm": sm.backtracks, "sr": sr.backtracks}
                )
                logger.warning("SR used more backtracks than SM", h=h, p1=p1, kh=kh, index=index)

        if self.config.extended_fraction > 0:
            return
        solved: Dict[Tuple[int, int, int], Dict[str, int]] = {}
        for result in report.cells:
            solved.setdefault((result.h, result.p1, result.kh), {})[result.model] = result.solved
        for (h, p1, kh), models in solved.items():
            if "sb" in models and "sm" in models and models["sb"] < models["sm"]:
                report.sb_shortfalls.append({"h": h, "p1": p1, "kh": kh, "sb": models["sb"], "sm": models["sm"]})
                logger.warning("SB solved fewer instances than SM", h=h, p1=p1, kh=kh)
