import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacing.core.oracle import check_spacing_h, dc_oracle
from spacing.core.propagators import (
    InterVoicePropagator,
    Spacing1Propagator,
    Spacing1Spec,
    intervoice_counts,
    intervoice_prune,
    voice_pairs,
)
from spacing.core.rhythm import ModelKind, build_model, root_fixpoint, solve_model
from spacing.core.solver import PropagationContext, SearchLimits, Status, VariableStore, bits, propagate_fixpoint
from spacing.utils.errors import SpecError

FIRST = Spacing1Spec(frozenset({1, 2}), 5, 4, 21)
SECOND = Spacing1Spec(frozenset({3, 4}), 7, 3, 21)


def test_second_onset_of_voice_one_is_forced_to_beat_three(two_voice_instance):
    status, masks = root_fixpoint(build_model(two_voice_instance, ModelKind.SR))
    assert status is Status.CONSISTENT
    holders = [position for position in range(2, 6) if 2 in bits(masks[position - 1])]
    assert holders == [3]


def test_sequence_model_alone_leaves_more_room(two_voice_instance):
    status, masks = root_fixpoint(build_model(two_voice_instance, ModelKind.SM))
    assert status is Status.CONSISTENT
    holders = [position for position in range(2, 6) if 2 in bits(masks[position - 1])]
    assert len(holders) > 1


@pytest.mark.parametrize("kind", [ModelKind.SM, ModelKind.SR])
def test_two_symmetric_solutions(two_voice_instance, kind):
    outcome = solve_model(build_model(two_voice_instance, kind), limits=SearchLimits())
    assert outcome.solution_count == 2
    for solution in outcome.solutions:
        assert solution[2] == 2
        assert {solution[4], solution[6]} == {3, 4}


def test_blocking_counts_after_the_first_onset():
    store = VariableStore([[1]] + [[0, 1, 2, 3, 4]] * 20)
    variables = list(range(21))
    propagate_fixpoint(store, [Spacing1Propagator(FIRST, variables), Spacing1Propagator(SECOND, variables)])
    u, blocked = intervoice_counts(PropagationContext(store), variables, FIRST, SECOND)
    assert u == 3
    assert blocked == [0, 3, 1, 2, 2]


def test_assigning_the_wrong_beat_fails():
    store = VariableStore([[1], [0, 1, 2, 3, 4], [0, 1, 2, 3, 4], [2]] + [[0, 1, 2, 3, 4]] * 17)
    variables = list(range(21))
    propagators = [Spacing1Propagator(FIRST, variables), Spacing1Propagator(SECOND, variables)]
    propagators += voice_pairs([FIRST, SECOND], variables)
    assert propagate_fixpoint(store, propagators) is Status.FAILED


def test_prune_runs_every_pair():
    store = VariableStore([[1]] + [[0, 1, 2, 3, 4]] * 20)
    variables = list(range(21))
    propagate_fixpoint(store, [Spacing1Propagator(FIRST, variables), Spacing1Propagator(SECOND, variables)])
    pairs = voice_pairs([FIRST, SECOND], variables)
    assert len(pairs) == 2
    assert intervoice_prune(PropagationContext(store), pairs) is Status.CONSISTENT
    assert 2 not in store.domain(1)


def test_overlapping_value_sets_are_rejected():
    with pytest.raises(SpecError):
        InterVoicePropagator(FIRST, Spacing1Spec(frozenset({2, 3}), 7, 3, 21), list(range(21)))


@st.composite
def two_voice_problems(draw):
    p1, p2 = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    k1, k2 = draw(st.integers(1, 2)), draw(st.integers(1, 2))
    n = max(p1 * k1, p2 * k2)
    values = draw(st.permutations([1, 2, 3, 4]))
    split = draw(st.integers(1, 2))
    s1, s2 = sorted(values[:split]), sorted(values[split : split + 2])
    domains = [sorted(draw(st.sets(st.integers(0, 4), min_size=1, max_size=3))) for _ in range(n)]
    return (s1, p1, k1), (s2, p2, k2), n, domains


@settings(max_examples=200, deadline=None)
@given(two_voice_problems())
def test_pruning_is_sound(problem):
    (s1, p1, k1), (s2, p2, k2), n, domains = problem
    specs = [Spacing1Spec(frozenset(s1), p1, k1, n), Spacing1Spec(frozenset(s2), p2, k2, n)]
    variables = list(range(n))
    propagators = [Spacing1Propagator(spec, variables) for spec in specs] + voice_pairs(specs, variables)
    store = VariableStore(domains)
    status = propagate_fixpoint(store, propagators)

    supported = dc_oracle(domains, lambda x: check_spacing_h(x, [(s1, p1, k1), (s2, p2, k2)]))
    if supported is None:
        return
    assert status is Status.CONSISTENT
    for i, values in enumerate(supported):
        assert values <= set(store.domain(i))
