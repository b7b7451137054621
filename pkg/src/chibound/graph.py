"""Small simple graphs stored as bitset adjacency rows.

A :class:`Graph` holds at most :data:`MAX_VERTICES` vertices; row ``adj[v]``
is an int whose bit ``w`` is set iff ``vw`` is an edge. Graphs are immutable
and hashable, so they can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoint, loop, size overflow)."""


def _check_size(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_size(self.n)
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {v},{w}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.adj[v] >> w & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in iter_bits(self.adj[v] >> (v + 1) << (v + 1))]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for w in iter_bits(row):
                new |= 1 << perm[w]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        keep = self.vertex_mask & ~(1 << v)
        return induced(self, iter_bits(keep))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _from_rows(rows: list[int]) -> Graph:
    # Rows built internally are already valid; skip the O(n^2) validation.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", len(rows))
    object.__setattr__(g, "adj", tuple(rows))
    return g


def make(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``0..n-1`` from an edge list (symmetric closure applied)."""
    _check_size(n)
    rows = [0] * n
    for v, w in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise GraphError(f"edge ({v}, {w}) has an endpoint outside 0..{n - 1}")
        if v == w:
            raise GraphError(f"loop at vertex {v}")
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return _from_rows(rows)


def empty(n: int) -> Graph:
    _check_size(n)
    return _from_rows([0] * n)


def complete(n: int) -> Graph:
    _check_size(n)
    full = (1 << n) - 1
    return _from_rows([full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return make(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return make(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_size(g.n + h.n)
    return _from_rows(list(g.adj) + [row << g.n for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    _check_size(g.n + h.n)
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << g.n
    return _from_rows([row | h_mask for row in g.adj] + [(row << g.n) | g_mask for row in h.adj])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _from_rows([full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``; they are relabelled 0.. in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return _from_rows(rows)


def mycielski(g: Graph) -> Graph:
    """Mycielskian: vertices ``v``, shadows ``n + v`` and apex ``2n``.

    Shadow ``n + v`` is adjacent to every original neighbour of ``v``; the apex
    is adjacent to all shadows.
    """
    n = g.n
    _check_size(2 * n + 1)
    edges = list(g.edges())
    for v in range(n):
        for w in iter_bits(g.adj[v]):
            edges.append((n + v, w))
        edges.append((n + v, 2 * n))
    return make(2 * n + 1, edges)
