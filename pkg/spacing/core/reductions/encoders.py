"""
SAT to Spacing constructions.

Each encoder turns a CNF with v variables and c clauses into per-position
domains plus constraint parameters. Literal value ids:

    p_i -> i, not p_i -> v + i              (lit)
    primed copy of lit l   -> 2v + lit(l)
    copy of lit l for clause i -> 4v + (i - 1) * 2v + lit(l)
    dummy -> 0

Tables below are 1-based ``(row, column)`` over rows of a fixed width.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple

import orjson
import structlog
from pydantic import BaseModel, ConfigDict, ValidationError

from spacing.core.oracle import SpacingSpec, check_spacing, check_spacing_f, check_spacing_h
from spacing.core.reductions.cnf import Cnf
from spacing.utils.constants import VALUES
from spacing.utils.errors import InstanceFormatError, ReductionError

logger = structlog.get_logger(__name__)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


class ReductionKind(str, Enum):
    SPACING = "spacing"
    SPACING_F = "spacingf"
    SPACING_F_NOMAX = "spacingf-nomax"
    SPACING_H = "spacingh"


# =============================================================================
# Value ids
# =============================================================================

def lit_id(literal: int, v: int) -> int:
    return literal if literal > 0 else v - literal


def primed_id(literal: int, v: int) -> int:
    return 2 * v + lit_id(literal, v)


def indexed_id(literal: int, clause: int, v: int) -> int:
    return 4 * v + (clause - 1) * 2 * v + lit_id(literal, v)


def literal_of(value: int, v: int) -> int:
    """Inverse of ``lit_id`` for values 1..2v."""
    if not 1 <= value <= 2 * v:
        raise ReductionError(f"value {value} does not stand for a literal")
    return value if value <= v else -(value - v)


def value_labels(kind: ReductionKind, v: int, c: int) -> Dict[str, int]:
    """Readable label of every value id used by a construction."""
    labels = {"0": VALUES.DUMMY}
    literals = list(range(1, v + 1)) + [-i for i in range(1, v + 1)]
    for literal in literals:
        labels[str(literal)] = lit_id(literal, v)
    if ReductionKind(kind) is ReductionKind.SPACING_H:
        for literal in literals:
            labels[f"{literal}'"] = primed_id(literal, v)
        for clause in range(1, c + 1):
            for literal in literals:
                labels[f"{literal}^{clause}"] = indexed_id(literal, clause, v)
    return labels


# =============================================================================
# Reduced instances
# =============================================================================

class ReducedVoice(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: Tuple[int, ...]
    p: int


class ReducedInstance(BaseModel):
    """Per-position domains and constraint parameters of one construction.

    Spacing kinds use ``s``, ``a``, ``b``, ``k``; Spacing_h uses ``voices``
    and ``k``.
    """

    model_config = ConfigDict(frozen=True)

    kind: ReductionKind
    v: int
    clauses: Tuple[Tuple[int, ...], ...]
    domains: Tuple[Tuple[int, ...], ...]
    k: int
    s: Tuple[int, ...] = ()
    a: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    voices: Tuple[ReducedVoice, ...] = ()

    @property
    def n(self) -> int:
        return len(self.domains)

    @property
    def c(self) -> int:
        return len(self.clauses)

    @property
    def forced(self) -> bool:
        return self.kind in (ReductionKind.SPACING_F, ReductionKind.SPACING_F_NOMAX)

    def cnf(self) -> Cnf:
        return Cnf(self.v, self.clauses)

    def spacing_spec(self) -> SpacingSpec:
        return SpacingSpec(frozenset(self.s), self.a, self.b, self.k, self.n)

    def check(self, assignment: List[int]) -> bool:
        """The construction's constraint on a complete assignment."""
        if any(value not in domain for value, domain in zip(assignment, self.domains)):
            return False
        if self.kind is ReductionKind.SPACING_H:
            return check_spacing_h(assignment, [(voice.s, voice.p, self.k) for voice in self.voices])
        if self.forced:
            return check_spacing_f(assignment, self.spacing_spec())
        return check_spacing(assignment, self.spacing_spec())

    def mapping(self) -> Dict[str, int]:
        return value_labels(self.kind, self.v, self.c)

    def row(self, width: int, index: int) -> Tuple[Tuple[int, ...], ...]:
        """Domains of table row ``index`` (1-based) for rows of ``width``."""
        return self.domains[(index - 1) * width : index * width]

    # =========================================================================
    # JSON
    # =========================================================================

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(mode="json"), option=JSON_OPTIONS)

    def mapping_json(self) -> bytes:
        return orjson.dumps({"kind": self.kind.value, "values": self.mapping()}, option=JSON_OPTIONS)

    @classmethod
    def from_json(cls, data: bytes) -> "ReducedInstance":
        try:
            payload = orjson.loads(data)
        except orjson.JSONDecodeError as e:
            raise InstanceFormatError(f"invalid JSON: {e}") from e
        return cls.from_payload(payload)

    @classmethod
    def from_payload(cls, payload: dict) -> "ReducedInstance":
        try:
            return cls.model_validate(payload)
        except ValidationError as e:
            raise InstanceFormatError(f"invalid reduced instance: {e}") from e


def load_reduced(path: Path) -> ReducedInstance:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InstanceFormatError(f"cannot read {path}: {e}") from e
    return ReducedInstance.from_json(data)


def save_reduced(reduced: ReducedInstance, path: Path, mapping_path: Optional[Path] = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(reduced.to_json())
    if mapping_path is not None:
        Path(mapping_path).write_bytes(reduced.mapping_json())


# =============================================================================
# Constructions
# =============================================================================

def _freeze(cells: List[Set[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(sorted(cell)) for cell in cells)


def _clause_ids(cnf: Cnf, j: int) -> Set[int]:
    return {lit_id(literal, cnf.v) for literal in cnf.clauses[j - 1]}


def _variable_column(cnf: Cnf, i: int) -> Set[int]:
    return {lit_id(i, cnf.v), lit_id(-i, cnf.v)}


def _literal_ids(cnf: Cnf) -> Tuple[int, ...]:
    return tuple(range(1, 2 * cnf.v + 1))


def reduce_spacing(cnf: Cnf) -> ReducedInstance:
    """Rows of width v + 1: v variable columns and one clause column; the
    last row has no clause cell."""
    v, c = cnf.v, cnf.c
    width = v + 1
    cells: List[Set[int]] = []
    for j in range(1, c + 2):
        for i in range(1, width + 1):
            if i <= v:
                cells.append(_variable_column(cnf, i))
            elif j <= c:
                cells.append(_clause_ids(cnf, j))

    k = c + 1
    reduced = ReducedInstance(
        kind=ReductionKind.SPACING,
        v=v,
        clauses=cnf.clauses,
        domains=_freeze(cells),
        k=k,
        s=_literal_ids(cnf),
        a=(1,) * (k - 1),
        b=(v + 1,) * (k - 1),
    )
    logger.debug("Reduced to Spacing", v=v, c=c, n=reduced.n)
    return reduced


def reduce_spacing_f(cnf: Cnf) -> ReducedInstance:
    """Positive part (rows 1..c+1), an all-dummy row c+2, then a negative part."""
    v, c = cnf.v, cnf.c
    width = v + 1
    cells: List[Set[int]] = []
    for j in range(1, 2 * c + 4):
        for i in range(1, width + 1):
            if j == c + 2:
                cells.append({VALUES.DUMMY})
            elif i <= v:
                cells.append(_variable_column(cnf, i))
            elif j <= c:
                cells.append(_clause_ids(cnf, j))
            else:
                cells.append({VALUES.DUMMY})

    k = c + 1
    reduced = ReducedInstance(
        kind=ReductionKind.SPACING_F,
        v=v,
        clauses=cnf.clauses,
        domains=_freeze(cells),
        k=k,
        s=_literal_ids(cnf),
        a=(1,) * (k - 1),
        b=(v + 1,) * (k - 1),
    )
    logger.debug("Reduced to Spacing_F", v=v, c=c, n=reduced.n)
    return reduced


def reduce_spacing_f_nomax(cnf: Cnf) -> ReducedInstance:
    """c rows of width 7v + 1: clause column, satisfied literals, padding,
    unsatisfied literals, padding."""
    v, c = cnf.v, cnf.c
    if c < 1:
        raise ReductionError("the construction needs at least one clause")
    width = 7 * v + 1
    cells: List[Set[int]] = []
    for j in range(1, c + 1):
        cells.append(_clause_ids(cnf, j))
        for i in range(1, v + 1):
            cells.append({lit_id(i, v), VALUES.DUMMY})
        for i in range(1, v + 1):
            cells.append({lit_id(-i, v), VALUES.DUMMY})
        cells.extend({VALUES.DUMMY} for _ in range(2 * v))
        for i in range(1, v + 1):
            cells.append(_variable_column(cnf, i))
        cells.extend({VALUES.DUMMY} for _ in range(2 * v))

    reduced = ReducedInstance(
        kind=ReductionKind.SPACING_F_NOMAX,
        v=v,
        clauses=cnf.clauses,
        domains=_freeze(cells),
        k=c,
        s=_literal_ids(cnf),
        a=(5 * v + 1,) * (c - 1),
        b=(width * c,) * (c - 1),
    )
    logger.debug("Reduced to Spacing_F without maximal distance", v=v, c=c, n=reduced.n)
    return reduced


def spacing_h_periods(v: int, c: int) -> Tuple[int, int]:
    p1 = c + 6 * c * v
    return p1, p1 + 2 * v


def reduce_spacing_h(cnf: Cnf) -> ReducedInstance:
    """Two voices with periods c + 6cv and c + 6cv + 2v, both repeated c times."""
    v, c = cnf.v, cnf.c
    if c == 1:
        raise ReductionError("a single-clause formula is trivially satisfiable; the two-voice layout needs c >= 2")
    if c < 1 or v < 1:
        raise ReductionError("the construction needs at least one variable and one clause")

    p1, p2 = spacing_h_periods(v, c)
    n = p2 * c
    cells: List[Set[int]] = [set() for _ in range(n)]
    literals = cnf.literals()

    def first(j: int, i: int) -> Set[int]:
        return cells[(j - 1) * p1 + i - 1]

    def second(j: int, i: int) -> Set[int]:
        return cells[(j - 1) * p2 + i - 1]

    base = c + 4 * c * v
    for j in range(1, c + 1):
        for i in range(1, c + 1):
            if i == j:
                first(j, i).update(indexed_id(literal, i, v) for literal in cnf.clauses[j - 1])
            else:
                first(j, i).update(indexed_id(literal, i, v) for literal in literals)
        for i in range(1, c + 1):
            for y, sign in ((0, 1), (1, -1)):
                for x in range(1, v + 1):
                    value = indexed_id(sign * x, i, v)
                    first(j, c + (i - 1) * 2 * v + v * y + x).add(value)
                    first(j, c + 2 * c * v + (i - 1) * 2 * v + v * y + x).add(value)
        for x in range(1, v + 1):
            first(j, base + x).add(primed_id(x, v))
            first(j, base + v + x).add(primed_id(-x, v))
            first(j, base + 2 * c * v - 2 * v + x).add(primed_id(-x, v))
            first(j, base + 2 * c * v - v + x).add(primed_id(x, v))
        for x in range(1, 2 * c * v - 4 * v + 1):
            first(j, base + 2 * v + x).add(VALUES.DUMMY)

    second_voice: Set[int] = set()
    for j in range(1, c + 1):
        for x in range(1, v + 1):
            for offset, literal in ((c, x), (c + v, -x), (base, x), (base + v, -x)):
                second(j, offset + x).add(lit_id(literal, v))
                second_voice.add((j - 1) * p2 + offset + x - 1)

    clause_cells = {(j - 1) * p1 + x - 1 for j in range(1, c + 1) for x in range(1, c + 1)}
    for position in range(n):
        if position not in clause_cells and position not in second_voice:
            cells[position].add(VALUES.DUMMY)

    s2 = _literal_ids(cnf)
    # Primed copies then clause-indexed copies form one contiguous id block.
    s1 = tuple(range(2 * v + 1, 4 * v + 2 * c * v + 1))
    reduced = ReducedInstance(
        kind=ReductionKind.SPACING_H,
        v=v,
        clauses=cnf.clauses,
        domains=_freeze(cells),
        k=c,
        voices=(ReducedVoice(s=s1, p=p1), ReducedVoice(s=s2, p=p2)),
    )
    logger.debug("Reduced to two-voice Spacing", v=v, c=c, p1=p1, p2=p2, n=n)
    return reduced


REDUCERS = {
    ReductionKind.SPACING: reduce_spacing,
    ReductionKind.SPACING_F: reduce_spacing_f,
    ReductionKind.SPACING_F_NOMAX: reduce_spacing_f_nomax,
    ReductionKind.SPACING_H: reduce_spacing_h,
}


def reduce(cnf: Cnf, kind: ReductionKind) -> ReducedInstance:
    return REDUCERS[ReductionKind(kind)](cnf)
