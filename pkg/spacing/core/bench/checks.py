"""
Propagator-versus-oracle equivalence suites behind ``spacing check``.

Every suite draws small random instances from a seeded numpy generator,
propagates them to fixpoint and compares the result with brute force. A
suite stops at the first disagreement and reports it.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import structlog

from spacing.core.oracle import (
    SpacingSpec,
    check_spacing,
    check_spacing1,
    check_spacing_f,
    check_spacing_h,
    check_spacing_sb,
    dc_oracle,
)
from spacing.core.propagators import (
    AllDifferentPropagator,
    BoundedSpacingPropagator,
    BoundedSpacingSpec,
    SbSpec,
    Spacing1Propagator,
    Spacing1Spec,
    SpacingSbPropagator,
    ValueGraph,
    maximum_matching,
    voice_pairs,
)
from spacing.core.reductions import (
    Cnf,
    ReductionKind,
    brute_sat,
    reduce,
    solve_reduced,
)
from spacing.core.solver import Propagator, SearchLimits, Status, VariableStore, propagate_fixpoint

logger = structlog.get_logger(__name__)

# Largest product of domain sizes a random check instance may have.
PRODUCT_BUDGET = 4096

Sets = Optional[List[frozenset]]


@dataclass
class CheckOptions:
    trials: int = 1000
    seed: int = 0
    max_v: int = 2
    max_c: int = 3
    timeout: float = 60.0


@dataclass
class CheckResult:
    suite: str
    trials: int = 0
    passed: bool = True
    counterexample: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)


# =============================================================================
# Helpers
# =============================================================================

def random_domains(rng: np.random.Generator, n: int, values: Sequence[int], budget: int = PRODUCT_BUDGET) -> List[List[int]]:
    """Random non-empty domains whose size product stays within ``budget``."""
    sizes = [1] * n
    product = 1
    for _ in range(4 * n):
        i = int(rng.integers(n))
        if sizes[i] < len(values) and product // sizes[i] * (sizes[i] + 1) <= budget:
            product = product // sizes[i] * (sizes[i] + 1)
            sizes[i] += 1
    return [sorted(int(x) for x in rng.choice(values, size, replace=False)) for size in sizes]


def fixpoint_sets(domains: Sequence[Sequence[int]], propagators: Sequence[Propagator]) -> Sets:
    store = VariableStore(domains)
    if propagate_fixpoint(store, propagators) is Status.FAILED:
        return None
    return [frozenset(store.domain(i)) for i in range(len(store))]


def _show(sets: Sets) -> Optional[List[List[int]]]:
    return None if sets is None else [sorted(s) for s in sets]


def _compare(result: CheckResult, domains, params: Dict[str, Any], expected: Sets, got: Sets) -> bool:
    if expected == got:
        return True
    result.passed = False
    result.counterexample = {
        "domains": [list(d) for d in domains],
        "params": params,
        "expected": _show(expected),
        "got": _show(got),
    }
    return False


def _subset(rng: np.random.Generator, pool: Sequence[int], low: int, high: int) -> List[int]:
    size = int(rng.integers(low, high, endpoint=True))
    return sorted(int(x) for x in rng.choice(pool, size, replace=False))


# =============================================================================
# Suites
# =============================================================================

def check_spacing1_suite(options: CheckOptions) -> CheckResult:
    rng = np.random.default_rng(options.seed)
    result = CheckResult("spacing1")
    for _ in range(options.trials):
        p = int(rng.integers(1, 4, endpoint=True))
        k = int(rng.integers(1, 3, endpoint=True))
        n = int(rng.integers(p * k, max(p * k, 12), endpoint=True))
        s = _subset(rng, [1, 2, 3, 4], 1, min(4, p + 1))
        domains = random_domains(rng, n, [0, 1, 2, 3, 4])
        spec = Spacing1Spec(frozenset(s), p, k, n)
        expected = dc_oracle(domains, lambda x: check_spacing1(x, s, p, k))
        got = fixpoint_sets(domains, [Spacing1Propagator(spec, list(range(n)))])
        result.trials += 1
        if not _compare(result, domains, {"s": s, "p": p, "k": k, "n": n}, expected, got):
            break
    return result


def check_sb_suite(options: CheckOptions) -> CheckResult:
    rng = np.random.default_rng(options.seed)
    result = CheckResult("sb")
    for _ in range(options.trials):
        p = int(rng.integers(1, 4, endpoint=True))
        k = int(rng.integers(1, 3, endpoint=True))
        n = int(rng.integers(p * k, max(p * k, 12), endpoint=True))
        m = int(rng.integers(0, p, endpoint=True))
        domains = random_domains(rng, n, [0, 1, 2])
        expected = dc_oracle(domains, lambda x: check_spacing_sb(x, 1, m, p, k))
        got = fixpoint_sets(domains, [SpacingSbPropagator(SbSpec(1, m, p, k, n), list(range(n)))])
        result.trials += 1
        if not _compare(result, domains, {"d": 1, "m": m, "p": p, "k": k, "n": n}, expected, got):
            break
    return result


def check_intervoice_suite(options: CheckOptions) -> CheckResult:
    """Soundness only: every value a support uses must survive."""
    rng = np.random.default_rng(options.seed)
    result = CheckResult("intervoice")
    for _ in range(options.trials):
        p1 = int(rng.integers(1, 5, endpoint=True))
        p2 = int(rng.integers(1, 5, endpoint=True))
        k1 = int(rng.integers(1, 3, endpoint=True))
        k2 = int(rng.integers(1, 3, endpoint=True))
        n = min(20, max(p1 * k1, p2 * k2) + int(rng.integers(0, 2, endpoint=True)))
        if p1 * k1 > n or p2 * k2 > n:
            continue
        values = [int(x) for x in rng.permutation([1, 2, 3, 4])]
        split = int(rng.integers(1, 3, endpoint=True))
        s1, s2 = sorted(values[:split]), sorted(values[split : split + 2])
        domains = random_domains(rng, n, [0, 1, 2, 3, 4])
        specs = [Spacing1Spec(frozenset(s1), p1, k1, n), Spacing1Spec(frozenset(s2), p2, k2, n)]
        variables = list(range(n))
        propagators = [Spacing1Propagator(spec, variables) for spec in specs] + voice_pairs(specs, variables)

        expected = dc_oracle(domains, lambda x: check_spacing_h(x, [(s1, p1, k1), (s2, p2, k2)]))
        got = fixpoint_sets(domains, propagators)
        result.trials += 1
        sound = expected is None or (got is not None and all(e <= g for e, g in zip(expected, got)))
        if not sound:
            _compare(result, domains, {"s1": s1, "p1": p1, "k1": k1, "s2": s2, "p2": p2, "k2": k2, "n": n}, expected, got)
            break
    return result


def check_bounded_suite(options: CheckOptions) -> CheckResult:
    rng = np.random.default_rng(options.seed)
    result = CheckResult("bounded")
    for _ in range(options.trials):
        n = int(rng.integers(1, 8, endpoint=True))
        k = int(rng.integers(1, 3, endpoint=True))
        s = _subset(rng, [1, 2, 3], 1, 2)
        a, b = [], []
        for _ in range(k - 1):
            low = int(rng.integers(1, n, endpoint=True))
            a.append(low)
            b.append(int(rng.integers(low, n, endpoint=True)))
        forced = bool(rng.integers(0, 1, endpoint=True))
        domains = random_domains(rng, n, [0, 1, 2, 3])
        spec = SpacingSpec(frozenset(s), tuple(a), tuple(b), k, n)
        checker = check_spacing_f if forced else check_spacing
        expected = dc_oracle(domains, lambda x: checker(x, spec))
        bounded = BoundedSpacingSpec(frozenset(s), tuple(a), tuple(b), k, n, forced)
        got = fixpoint_sets(domains, [BoundedSpacingPropagator(bounded, list(range(n)))])
        result.trials += 1
        params = {"s": s, "a": a, "b": b, "k": k, "n": n, "forced": forced}
        if not _compare(result, domains, params, expected, got):
            break
    return result


def check_alldifferent_suite(options: CheckOptions) -> CheckResult:
    rng = np.random.default_rng(options.seed)
    result = CheckResult("alldifferent")
    for _ in range(options.trials):
        n = int(rng.integers(1, 6, endpoint=True))
        domains = random_domains(rng, n, [1, 2, 3, 4, 5, 6])
        expected = dc_oracle(domains, lambda x: len(set(x)) == len(x))
        got = fixpoint_sets(domains, [AllDifferentPropagator(list(range(n)))])
        result.trials += 1
        if not _compare(result, domains, {"n": n}, expected, got):
            break
    return result


def check_matching_suite(options: CheckOptions) -> CheckResult:
    """Matching size against the largest set of distinct representatives."""
    rng = np.random.default_rng(options.seed)
    result = CheckResult("matching")
    for _ in range(options.trials):
        left = int(rng.integers(1, 6, endpoint=True))
        right = int(rng.integers(1, 6, endpoint=True))
        adjacency = [sorted(int(x) for x in np.flatnonzero(rng.random(right) < 0.4)) for _ in range(left)]
        graph = ValueGraph(list(range(left)), list(range(right)), adjacency)
        got = maximum_matching(graph).size
        expected = brute_matching(adjacency, right)
        result.trials += 1
        if got != expected:
            result.passed = False
            result.counterexample = {"adjacency": adjacency, "right": right, "expected": expected, "got": got}
            break
    return result


def brute_matching(adjacency: List[List[int]], right: int) -> int:
    best = 0

    def extend(u: int, used: int, size: int) -> None:
        nonlocal best
        if size + len(adjacency) - u <= best:
            return
        if u == len(adjacency):
            best = max(best, size)
            return
        for v in adjacency[u]:
            if not used >> v & 1:
                extend(u + 1, used | 1 << v, size + 1)
        extend(u + 1, used, size)

    extend(0, 0, 0)
    return best


def random_cnf(rng: np.random.Generator, v: int, c: int, width: int = 2) -> Cnf:
    clauses = []
    for _ in range(c):
        size = int(rng.integers(1, min(width, v), endpoint=True))
        variables = rng.choice(np.arange(1, v + 1), size, replace=False)
        clauses.append(tuple(int(x) if rng.random() < 0.5 else -int(x) for x in variables))
    return Cnf(v, tuple(clauses))


def check_reductions_suite(options: CheckOptions) -> CheckResult:
    """Satisfiability of every construction against the truth table."""
    rng = np.random.default_rng(options.seed)
    result = CheckResult("reductions")
    limits = SearchLimits(max_solutions=1, timeout=options.timeout, keep_solutions=True)
    for _ in range(options.trials):
        v = int(rng.integers(1, options.max_v, endpoint=True))
        c = int(rng.integers(1, options.max_c, endpoint=True))
        cnf = random_cnf(rng, v, c)
        expected = brute_sat(cnf)
        result.trials += 1
        for kind in ReductionKind:
            if kind is ReductionKind.SPACING_H and c == 1:
                continue
            found = solve_reduced(reduce(cnf, kind), limits)
            if found.outcome.timed_out:
                result.notes.append(f"{kind.value} timed out on {cnf.to_dimacs().strip()!r}")
                continue
            if found.satisfiable != expected:
                result.passed = False
                result.counterexample = {
                    "cnf": cnf.to_dimacs(),
                    "kind": kind.value,
                    "expected": expected,
                    "got": found.satisfiable,
                }
                return result
    return result


SUITES: Dict[str, Callable[[CheckOptions], CheckResult]] = {
    "spacing1": check_spacing1_suite,
    "sb": check_sb_suite,
    "intervoice": check_intervoice_suite,
    "bounded": check_bounded_suite,
    "alldifferent": check_alldifferent_suite,
    "matching": check_matching_suite,
    "reductions": check_reductions_suite,
}


def run_suite(name: str, options: CheckOptions) -> CheckResult:
    result = SUITES[name](options)
    logger.info("Check suite finished", suite=name, trials=result.trials, passed=result.passed)
    return result
