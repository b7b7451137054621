"""Induced-subgraph detection for small patterns.

Pattern vertices are matched in index order and host candidates are tried in
ascending order, so the first embedding found is the lexicographically least
host tuple. Candidate sets are bitsets: pattern vertex ``i`` must be adjacent
to the images of its pattern neighbours among ``0..i-1`` and non-adjacent to
the images of the rest.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, iter_bits
from .patterns import Pattern

Embedding = tuple[int, ...]


def _as_graph(p: Pattern | Graph) -> Graph:
    return p.graph if isinstance(p, Pattern) else p


def find_induced(g: Graph, p: Pattern | Graph) -> Embedding | None:
    """Least embedding ``(host(0), host(1), ...)`` of ``p`` into ``g`` as an
    induced subgraph, or ``None``."""
    pg = _as_graph(p)
    k, n = pg.n, g.n
    if k > n:
        return None
    if k == 0:
        return ()
    hadj = g.adj
    padj = pg.adj
    full = g.vertex_mask
    hdeg = g.degrees()
    # degree pruning: an image needs enough neighbours and non-neighbours
    eligible = []
    for i in range(k):
        d = padj[i].bit_count()
        nd = k - 1 - d
        m = 0
        for v in range(n):
            if hdeg[v] >= d and n - 1 - hdeg[v] >= nd:
                m |= 1 << v
        eligible.append(m)
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = eligible[i] & ~used
        row = padj[i]
        for j in range(i):
            h = image[j]
            if row >> j & 1:
                cand &= hadj[h]
            else:
                cand &= full & ~hadj[h]
            if not cand:
                return False
        for v in iter_bits(cand):
            image[i] = v
            if extend(i + 1, used | (1 << v)):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def contains(g: Graph, p: Pattern | Graph) -> bool:
    return find_induced(g, p) is not None


def is_free(g: Graph, patterns: Iterable[Pattern | Graph]) -> bool:
    return all(find_induced(g, p) is None for p in patterns)


def pattern_profile(g: Graph, patterns: Iterable[Pattern] = tuple(Pattern)) -> frozenset[Pattern]:
    """The set of catalog patterns occurring induced in ``g``."""
    return frozenset(p for p in patterns if find_induced(g, p) is not None)


def is_embedding(g: Graph, p: Pattern | Graph, emb: Embedding) -> bool:
    pg = _as_graph(p)
    if len(emb) != pg.n or len(set(emb)) != pg.n:
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    return all(
        pg.has_edge(a, b) == g.has_edge(emb[a], emb[b])
        for a in range(pg.n)
        for b in range(a + 1, pg.n)
    )
