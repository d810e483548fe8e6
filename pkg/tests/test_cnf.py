import pytest
from hypothesis import given
from hypothesis import strategies as st

from spacing.core.reductions import Cnf, brute_sat, find_model, load_dimacs, parse_dimacs
from spacing.utils.errors import DimacsError, OversizeError

RUNNING = """c running example
p cnf 3 4
-1 2 3 0
-2 3 0
-1 -2 0
1 2 0
"""


def test_parse_the_running_example(running_cnf):
    assert parse_dimacs(RUNNING) == running_cnf


def test_clauses_may_span_lines_and_percent_ends_input():
    text = "p cnf 2 2\n1\n-2 0 2\n0\n%\n0\nignored garbage\n"
    assert parse_dimacs(text) == Cnf(2, ((1, -2), (2,)))


def test_trailing_clause_without_terminator():
    assert parse_dimacs("p cnf 2 1\n1 2").clauses == ((1, 2),)


def test_dimacs_text_round_trip(running_cnf):
    assert parse_dimacs(running_cnf.to_dimacs()) == running_cnf


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2 0\n", 1),
        ("p cnf 2 1\np cnf 2 1\n", 2),
        ("p cnf two 1\n", 1),
        ("p dnf 2 1\n", 1),
        ("p cnf 2 1\n1 x 0\n", 2),
        ("p cnf 2 1\n1 3 0\n", 2),
        ("p cnf 2 1\n0\n", 2),
        ("c only\np cnf 2 2\n1 0\n", 2),
    ],
)
def test_errors_carry_the_line(text, line):
    with pytest.raises(DimacsError) as info:
        parse_dimacs(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_header():
    with pytest.raises(DimacsError) as info:
        parse_dimacs("c nothing here\n")
    assert info.value.line is None


def test_load_a_missing_file(tmp_path):
    with pytest.raises(DimacsError):
        load_dimacs(tmp_path / "absent.cnf")


def test_load_from_disk(tmp_path, running_cnf):
    path = tmp_path / "running.cnf"
    path.write_text(RUNNING)
    assert load_dimacs(path) == running_cnf


def test_literals_outside_the_variables_are_rejected():
    with pytest.raises(DimacsError):
        Cnf(2, ((1, 3),))
    with pytest.raises(DimacsError):
        Cnf(2, ((),))


def test_first_model_in_truth_table_order(running_cnf):
    assert find_model(running_cnf) == frozenset({1, -2, 3})
    assert running_cnf.satisfied_by({-1, 2, 3})
    assert not running_cnf.satisfied_by({1, 2, 3})
    assert not running_cnf.satisfied_by({1, -1, 3})


def test_unsatisfiable_formula():
    assert not brute_sat(Cnf(1, ((1,), (-1,))))


def test_no_clauses_is_satisfiable():
    assert find_model(Cnf(0)) == frozenset()


def test_truth_table_cap():
    with pytest.raises(OversizeError):
        find_model(Cnf(3, ((1,),)), max_vars=2)


@st.composite
def small_formulas(draw):
    v = draw(st.integers(1, 5))
    literal = st.integers(1, v).flatmap(lambda i: st.sampled_from([i, -i]))
    clauses = draw(st.lists(st.lists(literal, min_size=1, max_size=3), max_size=8))
    return Cnf(v, tuple(tuple(clause) for clause in clauses))


@given(small_formulas())
def test_found_models_satisfy_the_formula(cnf):
    model = find_model(cnf)
    if model is None:
        assignments = [
            frozenset(i if row >> (i - 1) & 1 else -i for i in range(1, cnf.v + 1)) for row in range(1 << cnf.v)
        ]
        assert not any(cnf.satisfied_by(assignment) for assignment in assignments)
    else:
        assert cnf.satisfied_by(model)
