import math

import orjson
import pytest

from spacing.core.rhythm import (
    ModelKind,
    RhythmInstance,
    Voice,
    build_model,
    build_om,
    build_sb,
    decode,
    expand,
    generate_instance,
    load_instance,
    map_sm_to_om,
    model_stats,
    root_fixpoint,
    save_instance,
    solve_model,
    verify,
)
from spacing.core.solver import SearchLimits, SearchStatus, Status, bits, mask_of
from spacing.utils.errors import DecodeError, InstanceFormatError

from conftest import A, B, C, O

# Voice 1 picks 2 of 3 beats twice, voice 2 picks 1 of 4 beats once.
SMALL = RhythmInstance(voices=(Voice(p=3, k=2, m=2), Voice(p=4, k=1, m=1)), n=6)


def test_sequence_model_fails_at_the_root(strict_instance):
    status, masks = root_fixpoint(build_model(strict_instance, ModelKind.SM))
    assert status is Status.FAILED and masks is None

    outcome = solve_model(build_model(strict_instance, ModelKind.SM))
    assert outcome.status is SearchStatus.UNSAT
    assert outcome.backtracks == 0
    assert outcome.nodes == 1


def test_onset_model_misses_the_same_failure(strict_instance):
    model = build_model(strict_instance, ModelKind.OM)
    status, masks = root_fixpoint(model)
    assert status is Status.CONSISTENT
    assert model.layout == [(0, 1), (0, 2), (1, 3)]
    assert masks == [mask_of([1, 2]), mask_of([1, 2]), mask_of([2, 3])]

    outcome = solve_model(model)
    assert outcome.status is SearchStatus.UNSAT
    assert outcome.backtracks > 0


@pytest.mark.parametrize("kind", list(ModelKind))
def test_every_model_counts_the_small_instance(kind):
    outcome = solve_model(build_model(SMALL, kind), limits=SearchLimits())
    # SB counts patterns, the others also tell the onsets of a voice apart
    expected = 4 if kind is ModelKind.SB else 4 * math.factorial(2) * math.factorial(1)
    assert outcome.solution_count == expected


@pytest.mark.parametrize("kind", list(ModelKind))
def test_solutions_decode_and_verify(kind):
    outcome = solve_model(build_model(SMALL, kind), limits=SearchLimits())
    for solution in outcome.solutions:
        patterns = decode(solution, SMALL, kind)
        assert verify(patterns, SMALL, kind)
        assert len(expand(patterns, SMALL)) == SMALL.n


def test_two_voice_solutions_respect_the_removals(two_voice_instance):
    outcome = solve_model(build_model(two_voice_instance, ModelKind.SM), limits=SearchLimits())
    assert outcome.solution_count == 2
    for solution in outcome.solutions:
        patterns = decode(solution, two_voice_instance, ModelKind.SM)
        assert expand(patterns, two_voice_instance)[0] == 1
        assert verify(patterns, two_voice_instance, ModelKind.SM)


def test_decode_a_single_voice_sequence():
    instance = RhythmInstance(voices=(Voice(p=5, k=3, m=3),), n=15)
    sequence = [0, A, C, B, 0] * 3
    assert decode(sequence, instance, ModelKind.SM) == [{2: A, 3: C, 4: B}]
    assert expand([{2: A, 3: C, 4: B}], instance) == sequence


def test_decode_rejects_bad_assignments():
    with pytest.raises(DecodeError):
        decode([0, 1], SMALL, ModelKind.SM)
    with pytest.raises(DecodeError):
        decode([1, 1, 2], SMALL, ModelKind.OM)
    with pytest.raises(DecodeError):
        decode([1, 4, 2], SMALL, ModelKind.OM)


def test_overlapping_voices_do_not_verify():
    assert not verify([{1: 1, 2: 2}, {1: 3}], SMALL, ModelKind.SM)


def test_map_from_the_folded_fixpoint():
    instance = RhythmInstance(voices=(Voice(p=5, k=3, m=3),), n=15)
    domains = [[O], [A], [C], [B], [O]] * 3
    assert map_sm_to_om(domains, instance) == [frozenset({2}), frozenset({4}), frozenset({3})]


def test_sequence_fixpoint_is_at_least_as_tight_as_onsets(two_voice_instance):
    _, sm_masks = root_fixpoint(build_model(two_voice_instance, ModelKind.SM))
    _, om_masks = root_fixpoint(build_model(two_voice_instance, ModelKind.OM))
    mapped = map_sm_to_om(sm_masks, two_voice_instance)
    for derived, om in zip(mapped, om_masks):
        assert derived <= set(bits(om))


def test_map_rejects_a_wrong_length():
    with pytest.raises(DecodeError):
        map_sm_to_om([[0]] * 3, SMALL)


def test_skipping_disjoint_pairs_keeps_the_solutions(two_voice_instance):
    full = build_om(two_voice_instance)
    trimmed = build_om(two_voice_instance, skip_disjoint=True)
    assert len(trimmed.propagators) < len(full.propagators)
    assert sorted(solve_model(trimmed).solutions) == sorted(solve_model(full).solutions)


def test_symmetry_broken_domains_keep_a_partly_removed_voice():
    instance = RhythmInstance(voices=(Voice(p=3, k=2, m=2), Voice(p=4, k=1, m=1)), n=6, removed=((2, 1), (3, 1), (3, 2)))
    model = build_sb(instance)
    assert model.representatives == (1, 3)
    assert bits(model.domains[1]) == [0, 1, 3]
    assert bits(model.domains[2]) == [0, 3]


def test_silent_voices_are_skipped():
    instance = RhythmInstance(voices=(Voice(p=2, k=2, m=0), Voice(p=4, k=1, m=2)), n=4)
    model = build_sb(instance)
    assert model.representatives == (0, 1)
    assert len(model.propagators) == 1
    assert solve_model(model).solution_count == math.comb(4, 2)


def test_model_stats():
    stats = model_stats(build_model(SMALL, ModelKind.SM))
    assert stats == {"variables": 6, "propagators": 2, "values": 24}


def test_instance_file_round_trip(tmp_path):
    instance = generate_instance(3, 12, 2, seed=9)
    path = tmp_path / "nested" / "instance.json"
    save_instance(instance, path)
    assert load_instance(path) == instance
    assert orjson.loads(path.read_bytes())["voices"][0] == {"k": instance.voices[0].k, "m": instance.voices[0].m, "p": 12}


@pytest.mark.parametrize(
    "payload",
    [
        b"not json",
        b"[]",
        b'{"voices": []}',
        b'{"voices": [], "n": 4}',
        b'{"voices": [{"p": 2, "k": 2, "m": 3}], "n": 4}',
        b'{"voices": [{"p": 2, "k": 2, "m": 1}], "n": 5}',
        b'{"voices": [{"p": 2, "k": 2, "m": 1}], "n": 4, "removed": [[5, 0]]}',
        b'{"voices": [{"p": 2, "k": 2, "m": 1}], "n": 4, "removed": [[1, 2]]}',
    ],
)
def test_malformed_instances(payload):
    with pytest.raises(InstanceFormatError):
        RhythmInstance.from_json(payload)


def test_missing_file(tmp_path):
    with pytest.raises(InstanceFormatError):
        load_instance(tmp_path / "absent.json")


@pytest.mark.parametrize("kind", list(ModelKind))
def test_new_store_holds_the_built_masks(kind):
    model = build_model(SMALL, kind)
    assert model.new_store().snapshot() == tuple(model.domains)


def test_single_voice_sequence_count():
    instance = RhythmInstance(voices=(Voice(p=3, k=2, m=2),), n=6)
    outcome = solve_model(build_model(instance, ModelKind.SM), limits=SearchLimits())
    assert outcome.status is SearchStatus.SAT
    assert outcome.solution_count == 6
