"""
CNF formulas: DIMACS input and output, evaluation and a truth-table SAT check.

Literals are signed integers as in DIMACS: ``i`` is p_i, ``-i`` is not p_i.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from spacing.utils.config import get_settings
from spacing.utils.errors import DimacsError, OversizeError

# Truth-table rows evaluated per numpy batch.
BATCH_BITS = 16


@dataclass(frozen=True)
class Cnf:
    v: int
    clauses: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.v < 0:
            raise DimacsError(f"negative variable count {self.v}")
        object.__setattr__(self, "clauses", tuple(tuple(clause) for clause in self.clauses))
        for number, clause in enumerate(self.clauses, start=1):
            if not clause:
                raise DimacsError(f"clause {number} is empty")
            for literal in clause:
                if literal == 0 or abs(literal) > self.v:
                    raise DimacsError(f"clause {number}: literal {literal} outside 1..{self.v}")

    @property
    def c(self) -> int:
        return len(self.clauses)

    def literals(self) -> List[int]:
        """lit(phi): every literal over the v variables, positives first."""
        return list(range(1, self.v + 1)) + [-i for i in range(1, self.v + 1)]

    def satisfied_by(self, model: Iterable[int]) -> bool:
        """True when ``model`` is consistent and hits every clause."""
        chosen = set(model)
        if any(-literal in chosen for literal in chosen):
            return False
        return all(any(literal in chosen for literal in clause) for clause in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.v} {self.c}"]
        lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Cnf:
    """Parse DIMACS cnf text; clauses may span lines and ``%`` ends the input."""
    header: Optional[Tuple[int, int, int]] = None
    clauses: List[Tuple[int, ...]] = []
    pending: List[int] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise DimacsError("duplicate header", number)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", number)
            try:
                v, c = int(parts[2]), int(parts[3])
            except ValueError as e:
                raise DimacsError(f"malformed header {line!r}", number) from e
            if v < 0 or c < 0:
                raise DimacsError("negative counts in header", number)
            header = (v, c, number)
            continue
        if header is None:
            raise DimacsError("clause before the 'p cnf' header", number)

        for token in line.split():
            try:
                literal = int(token)
            except ValueError as e:
                raise DimacsError(f"bad literal {token!r}", number) from e
            if literal == 0:
                if not pending:
                    raise DimacsError("empty clause", number)
                clauses.append(tuple(pending))
                pending = []
            elif abs(literal) > header[0]:
                raise DimacsError(f"literal {literal} outside 1..{header[0]}", number)
            else:
                pending.append(literal)

    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if pending:
        clauses.append(tuple(pending))
    v, c, header_line = header
    if len(clauses) != c:
        raise DimacsError(f"header announces {c} clauses, found {len(clauses)}", header_line)
    return Cnf(v, tuple(clauses))


def load_dimacs(path: Path) -> Cnf:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as e:
        raise DimacsError(f"cannot read {path}: {e}") from e
    return parse_dimacs(text)


def find_model(cnf: Cnf, max_vars: Optional[int] = None) -> Optional[FrozenSet[int]]:
    """First total model in truth-table order (p_i true iff bit i-1 is set)."""
    cap = get_settings().brute_sat_max_vars if max_vars is None else max_vars
    if cnf.v > cap:
        raise OversizeError(f"{cnf.v} variables exceed the truth-table cap {cap}")

    total = 1 << cnf.v
    batch = 1 << min(cnf.v, BATCH_BITS)
    for start in range(0, total, batch):
        rows = np.arange(start, start + batch, dtype=np.int64)
        ok = np.ones(batch, dtype=bool)
        for clause in cnf.clauses:
            hit = np.zeros(batch, dtype=bool)
            for literal in clause:
                bit = ((rows >> (abs(literal) - 1)) & 1).astype(bool)
                hit |= bit if literal > 0 else ~bit
            ok &= hit
        found = np.flatnonzero(ok)
        if found.size:
            row = int(rows[found[0]])
            return frozenset(i if row >> (i - 1) & 1 else -i for i in range(1, cnf.v + 1))
    return None


def brute_sat(cnf: Cnf, max_vars: Optional[int] = None) -> bool:
    return find_model(cnf, max_vars) is not None
