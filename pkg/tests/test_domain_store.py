import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacing.core.solver import (
    ChangeEvent,
    Domain,
    VariableStore,
    checkpoint,
    domain_assign,
    domain_create,
    domain_remove,
    mask_of,
    rollback,
)
from spacing.utils.errors import DomainError, TrailError


def test_domain_create_and_membership():
    domain = domain_create([3, 0, 5])
    assert list(domain) == [0, 3, 5]
    assert 3 in domain and 4 not in domain and -1 not in domain
    assert len(domain) == 3
    assert domain.min == 0


def test_empty_domain_is_rejected():
    with pytest.raises(DomainError):
        domain_create([])
    with pytest.raises(DomainError):
        VariableStore([[1], []])


def test_store_accepts_raw_masks_and_domains():
    store = VariableStore([0b110, Domain.from_values([0, 3]), [1]])
    assert store.snapshot() == (0b110, 0b1001, 0b10)
    with pytest.raises(DomainError):
        VariableStore([0b1, 0])


def test_negative_values_are_rejected():
    with pytest.raises(DomainError):
        mask_of([1, -2])


def test_singleton_value():
    assert Domain.from_values([7]).value == 7
    with pytest.raises(DomainError):
        _ = Domain.from_values([1, 2]).value


def test_remove_reports_events():
    store = VariableStore([[1, 2]])
    assert domain_remove(store, 0, 3) is ChangeEvent.NO_CHANGE
    assert domain_remove(store, 0, 1) is ChangeEvent.REMOVED
    assert store.value(0) == 2
    assert domain_remove(store, 0, 2) is ChangeEvent.FAILED
    # a failed mutation leaves the domain untouched
    assert store.domain(0) == Domain.from_values([2])


def test_assign_outside_domain_fails():
    store = VariableStore([[1, 2]])
    assert domain_assign(store, 0, 4) is ChangeEvent.FAILED
    assert domain_assign(store, 0, 2) is ChangeEvent.REMOVED
    assert store.is_assigned(0)
    assert store.contains(0, 2) and not store.contains(0, 1)
    assert store.all_assigned()


def test_rollback_restores_nested_checkpoints():
    store = VariableStore([[0, 1, 2], [0, 1, 2]])
    before = store.snapshot()
    outer = checkpoint(store)
    domain_remove(store, 0, 1)
    inner = checkpoint(store)
    domain_assign(store, 1, 2)
    assert store.depth == 2

    rollback(store, inner)
    assert store.domain(1) == Domain.from_values([0, 1, 2])
    assert 1 not in store.domain(0)

    rollback(store, outer)
    assert store.snapshot() == before
    assert store.depth == 0


def test_rollback_closes_later_marks():
    store = VariableStore([[0, 1]])
    outer = store.checkpoint()
    inner = store.checkpoint()
    store.rollback(outer)
    with pytest.raises(TrailError):
        store.rollback(inner)


def test_rollback_twice_is_an_error():
    store = VariableStore([[0, 1]])
    mark = store.checkpoint()
    store.rollback(mark)
    with pytest.raises(TrailError):
        store.rollback(mark)


operations = st.lists(
    st.one_of(
        st.tuples(st.just("remove"), st.integers(0, 3), st.integers(0, 5)),
        st.tuples(st.just("assign"), st.integers(0, 3), st.integers(0, 5)),
        st.tuples(st.just("checkpoint"), st.just(0), st.just(0)),
    ),
    max_size=40,
)


@settings(max_examples=200, deadline=None)
@given(operations)
def test_trail_round_trip(ops):
    store = VariableStore([range(6)] * 4)
    marks = [(store.checkpoint(), store.snapshot())]
    for kind, var, value in ops:
        if kind == "checkpoint":
            marks.append((store.checkpoint(), store.snapshot()))
        elif kind == "remove":
            store.remove(var, value)
        else:
            store.assign(var, value)

    for mark, snapshot in reversed(marks):
        store.rollback(mark)
        assert store.snapshot() == snapshot
    assert store.depth == 0
