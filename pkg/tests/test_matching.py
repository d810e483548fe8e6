from hypothesis import assume, given, settings
from hypothesis import strategies as st

from spacing.core.bench.checks import brute_matching
from spacing.core.propagators import Matching, ValueGraph, maximum_matching, regin_filter
from spacing.core.propagators.matching import WarmMatching


def example_graph() -> ValueGraph:
    """Values a, b, c and two dummy copies against period slots 1..5."""
    return ValueGraph.from_edges(
        ["a", "b", "c", "0_1", "0_2"],
        [1, 2, 3, 4, 5],
        [
            ("a", 1), ("a", 2), ("a", 4),
            ("b", 1), ("b", 4), ("b", 5),
            ("c", 2), ("c", 3), ("c", 5),
            ("0_1", 1), ("0_1", 5),
            ("0_2", 1), ("0_2", 5),
        ],
    )


def test_example_has_a_perfect_matching():
    graph = example_graph()
    matching = maximum_matching(graph)
    assert graph.edge_count == 13
    assert matching.size == 5
    assert matching.covers_left()
    labelled = matching.labelled(graph)
    assert labelled["c"] == 3
    assert labelled["a"] == 2
    assert labelled["b"] == 4


def test_regin_keeps_only_edges_of_some_maximum_matching():
    graph = example_graph()
    matching = maximum_matching(graph)
    kept = {graph.label(edge) for edge in graph.edges()} - {graph.label(e) for e in regin_filter(graph, matching)}
    assert kept == {("a", 2), ("b", 4), ("c", 3), ("0_1", 1), ("0_1", 5), ("0_2", 1), ("0_2", 5)}


def test_warm_start_survives_a_removed_edge():
    graph = example_graph()
    warm = WarmMatching()
    first = warm.solve(graph)
    assert first.size == 5

    smaller = ValueGraph.from_edges(
        graph.left,
        graph.right,
        [graph.label(edge) for edge in graph.edges() if graph.label(edge) != ("0_1", 1)],
    )
    second = warm.solve(smaller)
    assert second.size == 5
    assert second.labelled(smaller)["0_2"] == 1


def test_from_labelled_drops_vanished_edges():
    graph = ValueGraph(["x", "y"], [1, 2], [[0], [1]])
    matching = Matching.from_labelled(graph, {"x": 2, "y": 2})
    assert matching.pairs() == [(1, 1)]


def test_unmatched_right_nodes_keep_free_edges():
    # two variables, three values: every edge is in some maximum matching
    graph = ValueGraph(["x", "y"], [1, 2, 3], [[0, 1, 2], [0, 1, 2]])
    assert regin_filter(graph, maximum_matching(graph)) == set()


@st.composite
def bipartite_graphs(draw):
    left = draw(st.integers(1, 6))
    right = draw(st.integers(1, 6))
    adjacency = [sorted(draw(st.sets(st.integers(0, right - 1), max_size=right))) for _ in range(left)]
    return adjacency, right


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_matching_size_is_maximum(case):
    adjacency, right = case
    graph = ValueGraph(list(range(len(adjacency))), list(range(right)), adjacency)
    assert maximum_matching(graph).size == brute_matching(adjacency, right)


def edges_of_perfect_assignments(adjacency):
    """Edges used by some matching that saturates every left node."""
    used = set()

    def extend(u, taken, chosen):
        if u == len(adjacency):
            used.update(chosen)
            return
        for v in adjacency[u]:
            if not taken >> v & 1:
                extend(u + 1, taken | 1 << v, chosen + [(u, v)])

    extend(0, 0, [])
    return used


@st.composite
def saturable_graphs(draw):
    left = draw(st.integers(1, 7))
    right = draw(st.integers(left, 7))
    adjacency = [sorted(draw(st.sets(st.integers(0, right - 1), min_size=1, max_size=right))) for _ in range(left)]
    return adjacency, right


@settings(max_examples=300, deadline=None)
@given(saturable_graphs())
def test_regin_removes_exactly_the_edges_outside_every_maximum_matching(case):
    adjacency, right = case
    graph = ValueGraph(list(range(len(adjacency))), list(range(right)), adjacency)
    matching = maximum_matching(graph)
    assume(matching.covers_left())
    expected = set(graph.edges()) - edges_of_perfect_assignments(adjacency)
    assert regin_filter(graph, matching) == expected
