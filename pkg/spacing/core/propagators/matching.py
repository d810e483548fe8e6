"""
Bipartite value graphs, Hopcroft-Karp matching and Regin edge filtering.

The left side ``U`` is the side every solution must cover completely (the
values of S plus dummy copies for Spacing1, the variables for AllDifferent).
Nodes are addressed by index; labels are kept for reporting.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Hashable, Iterator, List, Optional, Set, Tuple

FAKE_INFINITY = -1
UNMATCHED = -1

Edge = Tuple[int, int]


@dataclass
class ValueGraph:
    left: List[Hashable]
    right: List[Hashable]
    adjacency: List[List[int]]

    def __post_init__(self) -> None:
        self._right_index = {label: index for index, label in enumerate(self.right)}

    @classmethod
    def from_edges(cls, left: List[Hashable], right: List[Hashable], edges: List[Tuple[Hashable, Hashable]]) -> "ValueGraph":
        left_index = {label: i for i, label in enumerate(left)}
        right_index = {label: i for i, label in enumerate(right)}
        adjacency: List[List[int]] = [[] for _ in left]
        for u, v in edges:
            adjacency[left_index[u]].append(right_index[v])
        return cls(list(left), list(right), [sorted(set(a)) for a in adjacency])

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)

    def edges(self) -> Iterator[Edge]:
        for u, targets in enumerate(self.adjacency):
            for v in targets:
                yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, edge: Edge) -> Tuple[Hashable, Hashable]:
        return self.left[edge[0]], self.right[edge[1]]

    def right_index(self, label: Hashable) -> Optional[int]:
        return self._right_index.get(label)


@dataclass
class Matching:
    pair_left: List[int]
    pair_right: List[int]

    @classmethod
    def empty(cls, graph: ValueGraph) -> "Matching":
        return cls([UNMATCHED] * len(graph.left), [UNMATCHED] * len(graph.right))

    @property
    def size(self) -> int:
        return sum(1 for v in self.pair_left if v != UNMATCHED)

    def pairs(self) -> List[Edge]:
        return [(u, v) for u, v in enumerate(self.pair_left) if v != UNMATCHED]

    def covers_left(self) -> bool:
        return all(v != UNMATCHED for v in self.pair_left)

    def labelled(self, graph: ValueGraph) -> Dict[Hashable, Hashable]:
        return {graph.left[u]: graph.right[v] for u, v in self.pairs()}

    @classmethod
    def from_labelled(cls, graph: ValueGraph, pairs: Dict[Hashable, Hashable]) -> "Matching":
        """Rebuild a matching on ``graph``, dropping pairs whose edge vanished."""
        matching = cls.empty(graph)
        for u, left_label in enumerate(graph.left):
            right_label = pairs.get(left_label)
            if right_label is None:
                continue
            v = graph.right_index(right_label)
            if v is None or matching.pair_right[v] != UNMATCHED or not graph.has_edge(u, v):
                continue
            matching.pair_left[u] = v
            matching.pair_right[v] = u
        return matching


def maximum_matching(graph: ValueGraph, warm_start: Optional[Matching] = None) -> Matching:
    """Hopcroft-Karp: BFS layering from free left nodes, then augmenting DFS.

    ``warm_start`` must be a valid matching on ``graph``; it is extended, not
    rebuilt.
    """
    adjacency = graph.adjacency
    n_left = len(graph.left)
    if warm_start is None:
        matching = Matching.empty(graph)
    else:
        matching = Matching(list(warm_start.pair_left), list(warm_start.pair_right))
    pair_left, pair_right = matching.pair_left, matching.pair_right

    while True:
        dist = [FAKE_INFINITY] * n_left
        queue: Deque[int] = deque()
        for u in range(n_left):
            if pair_left[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)

        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = pair_right[v]
                if w == UNMATCHED:
                    reachable_free = True
                elif dist[w] == FAKE_INFINITY:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            return matching

        cursor = [0] * n_left
        for root in range(n_left):
            if pair_left[root] != UNMATCHED:
                continue
            path = [root]
            via: List[int] = []
            while path:
                u = path[-1]
                if cursor[u] == len(adjacency[u]):
                    dist[u] = FAKE_INFINITY
                    path.pop()
                    if via:
                        via.pop()
                    continue
                v = adjacency[u][cursor[u]]
                cursor[u] += 1
                w = pair_right[v]
                if w == UNMATCHED:
                    pair_left[u] = v
                    pair_right[v] = u
                    for i in range(len(via) - 1, -1, -1):
                        pair_left[path[i]] = via[i]
                        pair_right[via[i]] = path[i]
                    break
                if dist[w] != FAKE_INFINITY and dist[w] == dist[u] + 1:
                    path.append(w)
                    via.append(v)


def _strongly_connected_components(successors: List[List[int]]) -> List[int]:
    """Iterative Tarjan; returns the component id of every node."""
    n = len(successors)
    index = [FAKE_INFINITY] * n
    low = [0] * n
    on_stack = [False] * n
    component = [FAKE_INFINITY] * n
    stack: List[int] = []
    counter = 0
    components = 0

    for start in range(n):
        if index[start] != FAKE_INFINITY:
            continue
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        work = [(start, 0)]
        while work:
            node, position = work[-1]
            targets = successors[node]
            if position < len(targets):
                work[-1] = (node, position + 1)
                target = targets[position]
                if index[target] == FAKE_INFINITY:
                    index[target] = low[target] = counter
                    counter += 1
                    stack.append(target)
                    on_stack[target] = True
                    work.append((target, 0))
                elif on_stack[target]:
                    low[node] = min(low[node], index[target])
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component[member] = components
                    if member == node:
                        break
                components += 1

    return component


def regin_filter(graph: ValueGraph, matching: Matching) -> Set[Edge]:
    """Edges that belong to no maximum matching.

    Matched edges are oriented left to right, free edges right to left. A
    free edge survives when its ends share a strongly connected component or
    its right end is reachable from an unmatched right node.
    """
    n_left = len(graph.left)
    n_right = len(graph.right)
    successors: List[List[int]] = [[] for _ in range(n_left + n_right)]
    for u, v in graph.edges():
        if matching.pair_left[u] == v:
            successors[u].append(n_left + v)
        else:
            successors[n_left + v].append(u)

    reached = [False] * (n_left + n_right)
    queue: Deque[int] = deque()
    for v in range(n_right):
        if matching.pair_right[v] == UNMATCHED:
            reached[n_left + v] = True
            queue.append(n_left + v)
    while queue:
        node = queue.popleft()
        for target in successors[node]:
            if not reached[target]:
                reached[target] = True
                queue.append(target)

    component = _strongly_connected_components(successors)

    unsupported: Set[Edge] = set()
    for u, v in graph.edges():
        if matching.pair_left[u] == v:
            continue
        if reached[n_left + v] or component[u] == component[n_left + v]:
            continue
        unsupported.add((u, v))
    return unsupported


@dataclass
class WarmMatching:
    """Matching remembered between runs of one propagator, keyed by labels."""
    pairs: Dict[Hashable, Hashable] = field(default_factory=dict)

    def solve(self, graph: ValueGraph) -> Matching:
        matching = maximum_matching(graph, Matching.from_labelled(graph, self.pairs))
        self.pairs = matching.labelled(graph)
        return matching
