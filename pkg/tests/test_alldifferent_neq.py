import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacing.core.oracle import dc_oracle
from spacing.core.propagators import AllDifferentPropagator, NeqOffsetPropagator
from spacing.core.solver import Status, VariableStore, propagate_fixpoint
from spacing.utils.errors import SpecError


def fixpoint(domains, propagators):
    store = VariableStore(domains)
    status = propagate_fixpoint(store, propagators)
    return status, [sorted(store.domain(i)) for i in range(len(store))]


def test_hall_interval_prunes_outside_values():
    status, domains = fixpoint([[1, 2], [1, 2], [1, 2, 3]], [AllDifferentPropagator([0, 1, 2])])
    assert status is Status.CONSISTENT
    assert domains == [[1, 2], [1, 2], [3]]


def test_pigeonhole_fails():
    status, _ = fixpoint([[1, 2]] * 3, [AllDifferentPropagator([0, 1, 2])])
    assert status is Status.FAILED


def test_empty_scope_is_rejected():
    with pytest.raises(SpecError):
        AllDifferentPropagator([])


def test_neq_offset_both_directions():
    # V_0 + 3 != V_1
    status, domains = fixpoint([[1, 2], [4]], [NeqOffsetPropagator(0, 3, 1, 0)])
    assert status is Status.CONSISTENT
    assert domains == [[2], [4]]


def test_neq_offset_conflict_fails():
    status, _ = fixpoint([[1], [4]], [NeqOffsetPropagator(0, 3, 1, 0)])
    assert status is Status.FAILED


def test_neq_offset_ignores_values_below_zero():
    # V_0 != V_1 + 5 with V_0 = 1 would exclude -4
    status, domains = fixpoint([[1], [0, 1]], [NeqOffsetPropagator(0, 0, 1, 5)])
    assert status is Status.CONSISTENT
    assert domains == [[1], [0, 1]]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sets(st.integers(1, 6), min_size=1, max_size=4), min_size=1, max_size=5))
def test_alldifferent_matches_the_dc_oracle(raw):
    domains = [sorted(values) for values in raw]
    expected = dc_oracle(domains, lambda x: len(set(x)) == len(x))
    status, got = fixpoint(domains, [AllDifferentPropagator(list(range(len(domains))))])
    if expected is None:
        assert status is Status.FAILED
    else:
        assert status is Status.CONSISTENT
        assert got == [sorted(values) for values in expected]
