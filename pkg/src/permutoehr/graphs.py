"""Labelled multigraphs whose components each have at most one cycle.

The objects here come in two equivalent presentations:

* ``EdgeMultiplicities``: a nonnegative integer for every singleton and
  pair of {1..m} (loop counts and edge multiplicities), feasible exactly
  when the family of edge slots has a system of distinct representatives
  (Hall's marriage theorem);
* ``Multigraph``: the graph with those loops and parallel edges, feasible
  exactly when every connected component has at most as many edges as
  vertices.

``to_multigraph`` / ``from_multigraph`` realize the bijection between the
two feasible sets.  Enumeration runs over graphs by depth-first assignment
of loop values {0,1} and pair multiplicities {0,1,2}, pruning any branch
in which a component acquires a second cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple, Optional

from .errors import BudgetError, DEFAULT_GRAPH_BOUND


@lru_cache(maxsize=None)
def vertex_pairs(m: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j) with 0 <= i < j < m, in lexicographic order; this
    fixes the indexing of the ``pair`` tuples throughout the module."""
    return tuple(combinations(range(m), 2))


@dataclass(frozen=True)
class EdgeMultiplicities:
    """Candidate member of the Hall-feasible sequence set: ``loop[i]`` is
    the multiplicity of singleton {i+1}, ``pair[k]`` the multiplicity of
    the k-th pair from :func:`vertex_pairs`."""

    m: int
    loop: tuple[int, ...]
    pair: tuple[int, ...]

    def __post_init__(self):
        if len(self.loop) != self.m or len(self.pair) != self.m * (self.m - 1) // 2:
            raise ValueError("multiplicity tuple lengths do not match m")
        if any(c < 0 for c in self.loop) or any(c < 0 for c in self.pair):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def flat(self) -> tuple[int, ...]:
        """(a_{1}, ..., a_{m}, a_{12}, a_{13}, ...) in one tuple."""
        return self.loop + self.pair

    def total(self) -> int:
        return sum(self.loop) + sum(self.pair)


@dataclass(frozen=True)
class Multigraph:
    """Labelled multigraph on m vertices with loop counts and pairwise edge
    multiplicities (indexed as in :func:`vertex_pairs`)."""

    m: int
    loops: tuple[int, ...]
    pair_mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.loops) != self.m or len(self.pair_mult) != self.m * (self.m - 1) // 2:
            raise ValueError("multiplicity tuple lengths do not match m")
        if any(c < 0 for c in self.loops) or any(c < 0 for c in self.pair_mult):
            raise ValueError("edge counts must be nonnegative")

    def edge_total(self) -> int:
        return sum(self.loops) + sum(self.pair_mult)


class GraphStats(NamedTuple):
    """Census signature: loop count, single-edge count, doubled-pair count."""

    n_loops: int
    n_single: int
    n_pairs: int


def graph_stats(graph: Multigraph) -> GraphStats:
    return GraphStats(
        n_loops=sum(graph.loops),
        n_single=sum(1 for c in graph.pair_mult if c == 1),
        n_pairs=sum(1 for c in graph.pair_mult if c == 2),
    )


def edge_slots(seq: EdgeMultiplicities) -> list[tuple[int, ...]]:
    """The family of edge slots: each singleton/pair repeated by its
    multiplicity, as tuples of endpoints."""
    slots = []
    for i, c in enumerate(seq.loop):
        slots.extend([(i,)] * c)
    for (i, j), c in zip(vertex_pairs(seq.m), seq.pair):
        slots.extend([(i, j)] * c)
    return slots


def find_sdr(seq: EdgeMultiplicities) -> Optional[list[int]]:
    """A system of distinct representatives for the edge slots of ``seq``
    (one vertex per slot, each an endpoint, all distinct), or None.

    Augmenting-path bipartite matching between slots and vertices; there
    are at most m slots in any feasible case, so this stays tiny."""
    slots = edge_slots(seq)
    if len(slots) > seq.m:
        return None
    owner: list[Optional[int]] = [None] * seq.m  # vertex -> slot index

    def augment(s: int, seen: list[bool]) -> bool:
        for v in slots[s]:
            if not seen[v]:
                seen[v] = True
                if owner[v] is None or augment(owner[v], seen):
                    owner[v] = s
                    return True
        return False

    for s in range(len(slots)):
        if not augment(s, [False] * seq.m):
            return None
    reps: list[Optional[int]] = [None] * len(slots)
    for v, s in enumerate(owner):
        if s is not None:
            reps[s] = v
    assert all(r is not None for r in reps)
    return reps  # type: ignore[return-value]


def satisfies_hall(seq: EdgeMultiplicities) -> bool:
    """Whether every subfamily of edge slots covers at least as many
    vertices as it has slots (equivalently: an SDR exists; the empty
    family passes)."""
    return find_sdr(seq) is not None


def component_cycle_check(graph: Multigraph) -> bool:
    """True iff every connected component has #edges <= #vertices, i.e. at
    most one cycle (a loop counts as one edge and one cycle)."""
    dsu = _DisjointSet(graph.m)
    for i, c in enumerate(graph.loops):
        for _ in range(c):
            dsu.add_loop(i)
    for (i, j), c in zip(vertex_pairs(graph.m), graph.pair_mult):
        for _ in range(c):
            dsu.add_edge(i, j)
    return dsu.within_cycle_limit()


def to_multigraph(seq: EdgeMultiplicities) -> Multigraph:
    """Attach loop[i] loops at vertex i and pair[k] parallel edges on the
    k-th pair; requires the Hall condition."""
    if not satisfies_hall(seq):
        raise ValueError("sequence violates the Hall condition")
    return Multigraph(seq.m, seq.loop, seq.pair)


def from_multigraph(graph: Multigraph) -> EdgeMultiplicities:
    """Read the loop and pair multiplicities back off; requires every
    component to have at most one cycle."""
    if not component_cycle_check(graph):
        raise ValueError("a component has more edges than vertices")
    return EdgeMultiplicities(graph.m, graph.loops, graph.pair_mult)


class _DisjointSet:
    """Union-find with per-component vertex and edge counters.

    No path compression, so unions can be rolled back from an undo log;
    the enumerator leans on that to reuse one structure across the whole
    depth-first search.
    """

    __slots__ = ("parent", "size", "edges", "log")

    def __init__(self, m: int):
        self.parent = list(range(m))
        self.size = [1] * m
        self.edges = [0] * m
        self.log: list[tuple] = []

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            i = p[i]
        return i

    def add_loop(self, i: int) -> bool:
        """Add one edge wholly inside i's component; False if that gives
        the component a second cycle."""
        r = self.find(i)
        self.edges[r] += 1
        self.log.append(("e", r))
        return self.edges[r] <= self.size[r]

    def add_edge(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return self.add_loop(ri)
        if self.size[ri] < self.size[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        self.size[ri] += self.size[rj]
        self.edges[ri] += self.edges[rj] + 1
        self.log.append(("u", rj, ri))
        return self.edges[ri] <= self.size[ri]

    def mark(self) -> int:
        return len(self.log)

    def rollback(self, mark: int):
        while len(self.log) > mark:
            op = self.log.pop()
            if op[0] == "e":
                self.edges[op[1]] -= 1
            else:
                _, child, root = op
                self.parent[child] = child
                self.size[root] -= self.size[child]
                self.edges[root] -= self.edges[child] + 1

    def within_cycle_limit(self) -> bool:
        return all(
            self.edges[r] <= self.size[r]
            for r in range(len(self.parent))
            if self.parent[r] == r
        )

    def component_count(self) -> int:
        return sum(1 for r in range(len(self.parent)) if self.parent[r] == r)


def _iter_raw(m: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield (loops, pair_mult) for every feasible assignment; the caller
    wraps into Multigraph where object identity matters."""
    pairs = vertex_pairs(m)
    n_pairs = len(pairs)
    loops = [0] * m
    mult = [0] * n_pairs
    dsu = _DisjointSet(m)

    def walk(slot: int):
        if slot == m + n_pairs:
            yield tuple(loops), tuple(mult)
            return
        if slot < m:
            yield from walk(slot + 1)
            mark = dsu.mark()
            if dsu.add_loop(slot):
                loops[slot] = 1
                yield from walk(slot + 1)
                loops[slot] = 0
            dsu.rollback(mark)
        else:
            k = slot - m
            i, j = pairs[k]
            yield from walk(slot + 1)
            mark = dsu.mark()
            if dsu.add_edge(i, j):
                mult[k] = 1
                yield from walk(slot + 1)
                mark2 = dsu.mark()
                if dsu.add_edge(i, j):
                    mult[k] = 2
                    yield from walk(slot + 1)
                dsu.rollback(mark2)
                mult[k] = 0
            dsu.rollback(mark)

    yield from walk(0)


def _check_enum_bound(m: int, bound: int):
    if m < 1:
        raise ValueError("need m >= 1")
    if m > bound:
        raise BudgetError(f"enumeration for m={m} exceeds the bound {bound}")


def enumerate_graphs(
    m: int, bound: int = DEFAULT_GRAPH_BOUND
) -> Iterator[Multigraph]:
    """Yield every labelled multigraph on m vertices in which each
    component has at most one cycle, exactly once."""
    _check_enum_bound(m, bound)
    for loops, mult in _iter_raw(m):
        yield Multigraph(m, loops, mult)


def enumerate_sequences(
    m: int, bound: int = DEFAULT_GRAPH_BOUND
) -> Iterator[EdgeMultiplicities]:
    """Yield every Hall-feasible multiplicity sequence, via the bijection."""
    _check_enum_bound(m, bound)
    for loops, mult in _iter_raw(m):
        yield EdgeMultiplicities(m, loops, mult)


@lru_cache(maxsize=None)
def _census_items(m: int) -> tuple[tuple[GraphStats, int], ...]:
    counts: dict[GraphStats, int] = {}
    for loops, mult in _iter_raw(m):
        key = GraphStats(
            sum(loops),
            sum(1 for c in mult if c == 1),
            sum(1 for c in mult if c == 2),
        )
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def graph_census(m: int, bound: int = DEFAULT_GRAPH_BOUND) -> dict[GraphStats, int]:
    """Counts of graphs by (n_loops, n_single, n_pairs) signature."""
    _check_enum_bound(m, bound)
    return dict(_census_items(m))


class StructureCounts(NamedTuple):
    trees: int
    looped_trees: int
    enhanced_trees: int
    quasitrees: int


@lru_cache(maxsize=None)
def _structure_counts_cached(m: int) -> StructureCounts:
    pairs = vertex_pairs(m)
    trees = looped = enhanced = quasi = 0
    for loops, mult in _iter_raw(m):
        edges = sum(loops) + sum(mult)
        if edges < m - 1:
            continue  # cannot be connected
        dsu = _DisjointSet(m)
        for i, c in enumerate(loops):
            if c:
                dsu.add_loop(i)
        for (i, j), c in zip(pairs, mult):
            for _ in range(c):
                dsu.add_edge(i, j)
        if dsu.component_count() != 1:
            continue
        if edges == m - 1:
            trees += 1
        elif any(loops):
            looped += 1
        elif any(c == 2 for c in mult):
            enhanced += 1
        else:
            quasi += 1
    return StructureCounts(trees, looped, enhanced, quasi)


def structure_counts(m: int, bound: int = DEFAULT_GRAPH_BOUND) -> StructureCounts:
    """Counts of the connected graphs, split into the four shapes a
    connected at-most-one-cycle multigraph can take: tree (#edges = m-1),
    tree plus one loop, tree with one edge doubled, and simple unicyclic
    with cycle length >= 3."""
    _check_enum_bound(m, bound)
    return _structure_counts_cached(m)


def is_connected(graph: Multigraph) -> bool:
    dsu = _DisjointSet(graph.m)
    for (i, j), c in zip(vertex_pairs(graph.m), graph.pair_mult):
        if c:
            dsu.add_edge(i, j)
    return dsu.component_count() == 1
