"""Canonical labelling by partition refinement and individualisation.

The search follows the usual nauty scheme on a small scale: refine an ordered
partition to an equitable one, individualise vertices of the first
non-singleton cell, and compare the relabelled adjacency rows at the leaves.
Two leaves with equal certificates yield an automorphism, which is used to
prune sibling subtrees and to jump back to the common ancestor.
Cells are bitmasks; every step is equivariant under vertex relabelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _from_rows, iter_bits
from .graph6 import to_graph6


@dataclass(frozen=True)
class Labeling:
    """Result of a canonical labelling run.

    ``order[i]`` is the vertex placed at canonical position ``i``;
    ``certificate`` is the tuple of relabelled adjacency rows;
    ``generators`` are automorphisms (as vertex maps) found during search,
    which generate the full automorphism group.
    """

    order: tuple[int, ...]
    certificate: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def _refine(adj: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    n = len(adj)
    queue = list(splitters)
    while queue and len(cells) < n:
        w = queue.pop()
        out: list[int] = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                c = (adj[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                queue.append(frag)
        if changed:
            cells = out
    return cells


def _orbit_roots(n: int, perms: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None = None
        self.best: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None = None
        self.auts: list[tuple[int, ...]] = []

    def _certificate(self, order: tuple[int, ...]) -> tuple[int, ...]:
        adj = self.adj
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            row = 0
            for w in iter_bits(adj[v]):
                row |= 1 << pos[w]
            rows.append(row)
        return tuple(rows)

    def _add_aut(self, src: tuple[int, ...], dst: tuple[int, ...]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        t = tuple(perm)
        if t != tuple(range(self.n)):
            self.auts.append(t)

    def _leaf(self, cells: list[int], seq: tuple[int, ...]) -> int | None:
        order = tuple(c.bit_length() - 1 for c in cells)
        cert = self._certificate(order)
        if self.first is None:
            self.first = self.best = (order, cert, seq)
            return None
        for ref in (self.first, self.best):
            if cert == ref[1]:
                self._add_aut(order, ref[0])
                k = 0
                for a, b in zip(seq, ref[2]):
                    if a != b:
                        break
                    k += 1
                return k
        if cert > self.best[1]:
            self.best = (order, cert, seq)
        return None

    def dfs(self, cells: list[int], seq: tuple[int, ...]) -> int | None:
        if len(cells) == self.n:
            return self._leaf(cells, seq)
        depth = len(seq)
        idx = 0
        while not cells[idx] & (cells[idx] - 1):
            idx += 1
        target = cells[idx]
        explored: list[int] = []
        n_auts_seen = -1
        roots: list[int] = []
        for v in iter_bits(target):
            if explored:
                if len(self.auts) != n_auts_seen:
                    n_auts_seen = len(self.auts)
                    fixing = [p for p in self.auts if all(p[s] == s for s in seq)]
                    roots = _orbit_roots(self.n, fixing) if fixing else []
                if roots and any(roots[v] == roots[e] for e in explored):
                    continue
            single = 1 << v
            child = cells[:idx] + [single, target ^ single] + cells[idx + 1:]
            child = _refine(self.adj, child, [single])
            r = self.dfs(child, seq + (v,))
            explored.append(v)
            if r is not None and r < depth:
                return r
        return None


def initial_cells(g: Graph, keys: Sequence[int] | None = None) -> list[int]:
    """Ordered partition by ``keys`` (default: degree), ascending."""
    if keys is None:
        keys = g.degrees()
    groups: dict[int, int] = {}
    for v, k in enumerate(keys):
        groups[k] = groups.get(k, 0) | (1 << v)
    return [groups[k] for k in sorted(groups)]


def canonical_labeling(g: Graph, keys: Sequence[int] | None = None) -> Labeling:
    """Canonical labelling of ``g``.

    ``keys`` optionally supplies an isomorphism-invariant vertex colouring used
    as the starting partition; the result is canonical for each fixed choice of
    key function.
    """
    if g.n == 0:
        return Labeling((), (), ())
    cells = initial_cells(g, keys)
    cells = _refine(g.adj, cells, list(cells))
    search = _Search(g.adj)
    search.dfs(cells, ())
    assert search.best is not None
    return Labeling(search.best[0], search.best[1], tuple(search.auts))


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    return _from_rows(list(lab.certificate))


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant label: graph6 of the canonically relabelled graph."""
    return to_graph6(canonical_graph(g)).decode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g).certificate == canonical_labeling(h).certificate


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_labeling(g).generators


def orbits_from_generators(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Map each vertex to the least vertex of its orbit."""
    return _orbit_roots(n, generators)


def automorphism_orbits(g: Graph) -> list[int]:
    return _orbit_roots(g.n, canonical_labeling(g).generators)
