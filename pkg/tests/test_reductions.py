import itertools

import orjson
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacing.core.propagators import BoundedSpacingPropagator, Spacing1Propagator, SpacingDecomposition
from spacing.core.reductions import (
    Cnf,
    ReducedInstance,
    ReductionKind,
    brute_sat,
    extract_model,
    indexed_id,
    lit_id,
    literal_of,
    load_reduced,
    primed_id,
    reduce,
    reduce_spacing,
    reduce_spacing_f,
    reduce_spacing_f_nomax,
    reduce_spacing_h,
    reduced_propagators,
    save_reduced,
    solve_reduced,
    spacing_h_periods,
    value_labels,
)
from spacing.utils.errors import InstanceFormatError, ReductionError

UNSAT = Cnf(1, ((1,), (-1,)))


def test_value_ids():
    assert [lit_id(literal, 3) for literal in (1, 3, -1, -3)] == [1, 3, 4, 6]
    assert primed_id(-2, 3) == 11
    assert indexed_id(1, 2, 3) == 12 + 6 + 1
    assert literal_of(5, 3) == -2
    with pytest.raises(ReductionError):
        literal_of(7, 3)


def test_spacing_layout(running_cnf):
    reduced = reduce_spacing(running_cnf)
    assert reduced.n == 19
    assert reduced.k == 5
    assert reduced.s == (1, 2, 3, 4, 5, 6)
    assert reduced.a == (1,) * 4 and reduced.b == (4,) * 4
    assert reduced.row(4, 1) == ((1, 4), (2, 5), (3, 6), (2, 3, 4))
    assert reduced.domains[-3:] == ((1, 4), (2, 5), (3, 6))


def test_forced_layout(running_cnf):
    reduced = reduce_spacing_f(running_cnf)
    assert reduced.n == 44
    assert reduced.forced
    assert reduced.row(4, 6) == ((0,),) * 4
    assert reduced.row(4, 7)[-1] == (0,)


def test_forced_without_maximal_distance_layout(running_cnf):
    reduced = reduce_spacing_f_nomax(running_cnf)
    assert reduced.n == 88
    assert reduced.k == 4
    assert reduced.a == (16,) * 3
    assert reduced.b == (88,) * 3
    first = reduced.row(22, 1)
    assert first[0] == (2, 3, 4)
    assert first[1:4] == ((0, 1), (0, 2), (0, 3))
    assert first[4:7] == ((0, 4), (0, 5), (0, 6))


def test_two_voice_layout(running_cnf):
    assert spacing_h_periods(3, 4) == (76, 82)
    reduced = reduce_spacing_h(running_cnf)
    assert reduced.n == 328
    assert [voice.p for voice in reduced.voices] == [76, 82]
    assert reduced.voices[1].s == (1, 2, 3, 4, 5, 6)
    assert reduced.voices[0].s == tuple(range(7, 37))
    assert reduced.domains[0] == tuple(sorted(indexed_id(literal, 1, 3) for literal in (-1, 2, 3)))


def test_small_two_voice_sizes():
    reduced = reduce_spacing_h(Cnf(1, ((1,), (-1,))))
    assert (reduced.voices[0].p, reduced.voices[1].p, reduced.n) == (14, 16, 32)
    assert reduce_spacing_f(UNSAT).n == 14
    assert reduce_spacing_f_nomax(UNSAT).n == 16


def test_two_voice_needs_two_clauses():
    with pytest.raises(ReductionError):
        reduce_spacing_h(Cnf(2, ((1, 2),)))
    with pytest.raises(ReductionError):
        reduce_spacing_h(Cnf(2))


def test_value_labels_of_the_two_voice_construction():
    labels = value_labels(ReductionKind.SPACING_H, 1, 2)
    assert labels == {
        "0": 0,
        "1": 1,
        "-1": 2,
        "1'": 3,
        "-1'": 4,
        "1^1": 5,
        "-1^1": 6,
        "1^2": 7,
        "-1^2": 8,
    }
    assert value_labels(ReductionKind.SPACING, 2, 5) == {"0": 0, "1": 1, "2": 2, "-1": 3, "-2": 4}


def test_propagator_choice(running_cnf):
    spacing = reduce(running_cnf, ReductionKind.SPACING)
    assert isinstance(reduced_propagators(spacing)[0], SpacingDecomposition)
    assert isinstance(reduced_propagators(spacing, cap=6)[0], BoundedSpacingPropagator)
    two_voice = reduce(running_cnf, ReductionKind.SPACING_H)
    assert all(isinstance(p, Spacing1Propagator) for p in reduced_propagators(two_voice))


@pytest.mark.parametrize(
    "kind",
    [ReductionKind.SPACING, ReductionKind.SPACING_F, pytest.param(ReductionKind.SPACING_F_NOMAX, marks=pytest.mark.slow)],
)
def test_running_example_is_satisfiable(running_cnf, kind):
    result = solve_reduced(reduce(running_cnf, kind))
    assert result.satisfiable
    assert running_cnf.satisfied_by(result.model)


@pytest.mark.parametrize("kind", [ReductionKind.SPACING, ReductionKind.SPACING_F, ReductionKind.SPACING_F_NOMAX])
def test_contradiction_has_no_support(kind):
    result = solve_reduced(reduce(UNSAT, kind))
    assert not result.satisfiable
    assert result.outcome.solution_count == 0
    assert not result.outcome.timed_out


@pytest.mark.slow
def test_two_voice_running_example(running_cnf):
    result = solve_reduced(reduce(running_cnf, ReductionKind.SPACING_H))
    assert result.satisfiable
    assert running_cnf.satisfied_by(result.model)


def test_two_voice_contradiction():
    assert not solve_reduced(reduce(UNSAT, ReductionKind.SPACING_H)).satisfiable


def test_extract_model_checks_the_support(running_cnf):
    reduced = reduce_spacing(running_cnf)
    assert extract_model(None, reduced) is None
    with pytest.raises(ReductionError):
        extract_model([1, 2], reduced)
    # p, q, r all true violates (not p or not q)
    support = [1, 2, 3] + [0] * (reduced.n - 3)
    with pytest.raises(ReductionError):
        extract_model(support, reduced)


def test_reduced_file_and_mapping(tmp_path, running_cnf):
    reduced = reduce(running_cnf, ReductionKind.SPACING_F)
    out = tmp_path / "reduced.json"
    mapping = tmp_path / "reduced.mapping.json"
    save_reduced(reduced, out, mapping)
    assert load_reduced(out) == reduced
    payload = orjson.loads(mapping.read_bytes())
    assert payload["kind"] == "spacingf"
    assert payload["values"]["-3"] == 6


def test_malformed_reduced_instances(tmp_path):
    with pytest.raises(InstanceFormatError):
        ReducedInstance.from_json(b"{")
    with pytest.raises(InstanceFormatError):
        ReducedInstance.from_payload({"kind": "nope", "v": 1, "clauses": [], "domains": [], "k": 1})
    with pytest.raises(InstanceFormatError):
        load_reduced(tmp_path / "absent.json")


def small_clauses(v):
    literals = [literal for i in range(1, v + 1) for literal in (i, -i)]
    singles = [(literal,) for literal in literals]
    pairs = [pair for pair in itertools.combinations(literals, 2) if pair[0] != -pair[1]]
    return singles + pairs


def exhaustive_corpus():
    """Every formula with at most two variables, two clauses and two literals per clause."""
    for v in (1, 2):
        for c in (1, 2):
            for clauses in itertools.product(small_clauses(v), repeat=c):
                yield Cnf(v, clauses)


CORPUS = list(exhaustive_corpus())


@pytest.mark.parametrize("kind", list(ReductionKind))
def test_reductions_agree_on_every_small_formula(kind):
    corpus = [cnf for cnf in CORPUS if kind is not ReductionKind.SPACING_H or cnf.c >= 2]
    assert len(corpus) == (68 if kind is ReductionKind.SPACING_H else 78)
    for cnf in corpus:
        result = solve_reduced(reduce(cnf, kind))
        assert not result.outcome.timed_out, cnf
        assert result.satisfiable == brute_sat(cnf), cnf
        if result.satisfiable:
            assert cnf.satisfied_by(result.model), cnf


@st.composite
def sampled_formulas(draw, min_clauses=1):
    v = draw(st.integers(1, 3))
    literal = st.integers(1, v).flatmap(lambda i: st.sampled_from([i, -i]))
    clauses = draw(st.lists(st.lists(literal, min_size=1, max_size=3), min_size=min_clauses, max_size=4))
    return Cnf(v, tuple(tuple(clause) for clause in clauses))


@pytest.mark.slow
@settings(max_examples=50, deadline=None)
@given(sampled_formulas(), st.sampled_from([ReductionKind.SPACING, ReductionKind.SPACING_F, ReductionKind.SPACING_F_NOMAX]))
def test_reductions_agree_with_the_truth_table(cnf, kind):
    result = solve_reduced(reduce(cnf, kind))
    assert result.satisfiable == brute_sat(cnf)
    if result.satisfiable:
        assert cnf.satisfied_by(result.model)


@pytest.mark.slow
@settings(max_examples=50, deadline=None)
@given(sampled_formulas(min_clauses=2))
def test_two_voice_reduction_agrees_with_the_truth_table(cnf):
    result = solve_reduced(reduce(cnf, ReductionKind.SPACING_H))
    assert result.satisfiable == brute_sat(cnf)
