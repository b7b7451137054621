"""Exact clique number, chromatic number, criticality and colouring enumeration.

All searches are exact backtracking over bitsets. Colourings are reported in
canonical first-use form: colour ``i`` first appears before colour ``i + 1``
when vertices are scanned in index order, which identifies colourings that
differ only by a permutation of colour names.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.colors, default=-1) + 1

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[v] != self.colors[w] for v, w in g.edges())

    def is_canonical(self) -> bool:
        seen = -1
        for c in self.colors:
            if c > seen + 1:
                return False
            seen = max(seen, c)
        return True

    def class_of(self, color: int) -> int:
        """Bitmask of the vertices with ``color``."""
        m = 0
        for v, c in enumerate(self.colors):
            if c == color:
                m |= 1 << v
        return m


def canonicalize(colors: Sequence[int]) -> tuple[int, ...]:
    """Rename colours into first-use order."""
    rename: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in rename:
            rename[c] = len(rename)
        out.append(rename[c])
    return tuple(out)


# -- clique number ---------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Size of a maximum clique (Bron-Kerbosch with pivoting and a size bound)."""
    adj = g.adj
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pool = cand | excl
        pivot = max(iter_bits(pool), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit
            if size + cand.bit_count() <= best:
                return

    expand(0, g.vertex_mask, 0)
    return best


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, choosing the lexicographically least vertex list."""
    target = clique_number(g)
    adj = g.adj

    def grow(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == target:
            return chosen
        if len(chosen) + cand.bit_count() < target:
            return None
        for v in iter_bits(cand):
            found = grow(chosen + [v], cand & adj[v] & ~((2 << v) - 1))
            if found is not None:
                return found
        return None

    return grow([], g.vertex_mask) or []


# -- colouring ---------------------------------------------------------------


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    adj = g.adj
    deg = g.degrees()
    colors = [-1] * n
    forb = [0] * n
    uncolored = g.vertex_mask
    while uncolored:
        v = max(iter_bits(uncolored), key=lambda u: (forb[u].bit_count(), deg[u], -u))
        c = 0
        while forb[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in iter_bits(adj[v] & uncolored):
            forb[w] |= 1 << c
    return colors


def _k_coloring(g: Graph, k: int) -> list[int] | None:
    """Backtracking k-colouring with DSATUR branching; ``None`` if impossible."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = g.adj
    deg = g.degrees()
    colors = [-1] * n
    forb = [0] * n
    full = (1 << k) - 1

    def search(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = -1
        best_key = (-1, -1)
        for u in iter_bits(uncolored):
            key = (forb[u].bit_count(), deg[u])
            if key > best_key:
                best_key = key
                v = u
        allowed = full & ~forb[v] & ((2 << used) - 1 if used < k else full)
        rest = uncolored & ~(1 << v)
        nbrs = adj[v] & rest
        for c in iter_bits(allowed):
            bit = 1 << c
            colors[v] = c
            touched = []
            for w in iter_bits(nbrs):
                if not forb[w] & bit:
                    forb[w] |= bit
                    touched.append(w)
            if search(rest, max(used, c + 1)):
                return True
            for w in touched:
                forb[w] &= ~bit
        colors[v] = -1
        return False

    # used = number of colours already opened; a new colour may only be the next one
    if search(g.vertex_mask, 0):
        return colors
    return None


def k_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours in canonical form, or ``None``."""
    colors = _k_coloring(g, k)
    if colors is None:
        return None
    return Coloring(canonicalize(colors))


def is_k_colorable(g: Graph, k: int) -> bool:
    return _k_coloring(g, k) is not None


def chromatic_number(g: Graph, omega: int | None = None) -> int:
    if g.n == 0:
        return 0
    lo = clique_number(g) if omega is None else omega
    hi = max(_dsatur_greedy(g)) + 1
    for k in range(lo, hi):
        if _k_coloring(g, k) is not None:
            return k
    return hi


def optimal_coloring(g: Graph) -> Coloring:
    chi = chromatic_number(g)
    col = k_coloring(g, chi)
    assert col is not None
    return col


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def is_vertex_critical(g: Graph, chi: int | None = None) -> bool:
    """True iff deleting any vertex lowers the chromatic number."""
    if g.n == 0:
        raise ValueError("criticality is undefined for the empty graph")
    if chi is None:
        chi = chromatic_number(g)
    if chi == 1:
        return g.n == 1
    # necessary conditions, exact: connected and minimum degree >= chi - 1
    if min(g.degrees()) < chi - 1 or not _is_connected(g):
        return False
    return all(_k_coloring(g.remove_vertex(v), chi - 1) is not None for v in range(g.n))


def iter_color_tuples(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Raw tuples behind :func:`enumerate_colorings`, lexicographic order."""
    n = g.n
    if n == 0:
        yield ()
        return
    if k <= 0:
        return
    adj = g.adj
    colors = [0] * n
    # class_mask[c] = vertices among 0..v-1 holding colour c
    class_mask = [0] * k

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        lower = adj[v] & ((1 << v) - 1)
        top = min(k, used + 1)
        bit = 1 << v
        for c in range(top):
            if class_mask[c] & lower:
                continue
            colors[v] = c
            class_mask[c] |= bit
            yield from rec(v + 1, used + 1 if c == used else used)
            class_mask[c] &= ~bit

    yield from rec(0, 0)


def enumerate_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """Every proper colouring with at most ``k`` colours, once per colour
    permutation class, in lexicographic order of the colour tuple."""
    for t in iter_color_tuples(g, k):
        yield Coloring(t)
