"""Isomorph-free generation of all graphs on n vertices.

Canonical augmentation: each graph on ``n - 1`` vertices is extended by a new
vertex ``n - 1`` joined to one neighbourhood mask per orbit of the parent's
automorphism group on masks. A child is kept iff the new vertex lies in the
orbit of the child's canonical deletion vertex, so every isomorphism class is
produced exactly once without a global lookup table.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, Sequence

from .canon import _orbit_roots, canonical_labeling
from .detect import is_free
from .graph import Graph, _from_rows, iter_bits
from .patterns import Pattern

log = logging.getLogger(__name__)

MAX_GENERATED = 10


def _vertex_key(adj: Sequence[int], degs: Sequence[int], v: int) -> int:
    # Isomorphism-invariant: degree first, then the neighbourhood degree
    # profile and the triangle count.
    row = adj[v]
    s = 0
    tri = 0
    for w in iter_bits(row):
        s += degs[w] * degs[w]
        tri += (adj[w] & row).bit_count()
    return (degs[v] << 20) | (s << 8) | (tri >> 1)


def _mask_orbit_reps(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """One neighbourhood mask per orbit of the automorphism group on subsets."""
    size = 1 << n
    if not generators:
        return list(range(size))
    seen = bytearray(size)
    reps = []
    bit_maps = [[1 << p[v] for v in range(n)] for p in generators]
    for m in range(size):
        if seen[m]:
            continue
        reps.append(m)
        seen[m] = 1
        stack = [m]
        while stack:
            x = stack.pop()
            for bm in bit_maps:
                y = 0
                for v in iter_bits(x):
                    y |= bm[v]
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
    return reps


def children(parent: Graph) -> list[Graph]:
    """Canonical one-vertex extensions of ``parent``, in mask order."""
    k = parent.n  # index of the new vertex
    new_bit = 1 << k
    gens = canonical_labeling(parent).generators if k else ()
    out = []
    padj = parent.adj
    pdeg = parent.degrees()
    for mask in _mask_orbit_reps(k, gens):
        dk = mask.bit_count()
        degs = [d + (mask >> v & 1) for v, d in enumerate(pdeg)]
        if degs and max(degs) > dk:
            continue
        degs.append(dk)
        rows = [row | new_bit if mask >> v & 1 else row for v, row in enumerate(padj)]
        rows.append(mask)
        top_deg = [v for v in range(k + 1) if degs[v] == dk]
        if len(top_deg) > 1:
            keys = {v: _vertex_key(rows, degs, v) for v in top_deg}
            top = max(keys.values())
            if keys[k] != top:
                continue
            tied = [v for v in top_deg if keys[v] == top]
            if len(tied) > 1:
                all_keys = [keys[v] if v in keys else _vertex_key(rows, degs, v) for v in range(k + 1)]
                lab = canonical_labeling(_from_rows(rows), all_keys)
                pos = lab.position
                w = max(tied, key=pos.__getitem__)
                if w != k:
                    roots = _orbit_roots(k + 1, lab.generators)
                    if roots[w] != roots[k]:
                        continue
        out.append(_from_rows(rows))
    return out


def extend_all(parents: Iterable[Graph]) -> Iterator[Graph]:
    for p in parents:
        yield from children(p)


def all_graphs(n: int, workers: int = 1) -> Iterator[Graph]:
    """Every isomorphism class on ``n`` vertices exactly once, in a fixed order.

    With ``workers > 1`` the last level is split across processes by parent;
    results are merged back in parent order, so the output is identical.
    """
    if not 1 <= n <= MAX_GENERATED:
        raise ValueError(f"n must be in 1..{MAX_GENERATED}, got {n}")
    level = [_from_rows([])]
    for _ in range(n - 1):
        level = list(extend_all(level))
    if workers > 1 and len(level) > 1:
        from .parallel import ordered_map

        for batch in ordered_map(children, level, workers):
            yield from batch
    else:
        yield from extend_all(level)


def graphs_up_to(n_max: int, workers: int = 1) -> Iterator[Graph]:
    """All isomorphism classes on ``1..n_max`` vertices, by increasing order."""
    level = [_from_rows([])]
    for n in range(1, n_max + 1):
        if n == n_max and workers > 1 and len(level) > 1:
            from .parallel import ordered_map

            level = [g for batch in ordered_map(children, level, workers) for g in batch]
        else:
            level = list(extend_all(level))
        log.debug("generated %d graphs on %d vertices", len(level), n)
        yield from level


def filter_free(stream: Iterable[Graph], patterns: Iterable[Pattern]) -> Iterator[Graph]:
    pats = list(patterns)
    for g in stream:
        if is_free(g, pats):
            yield g
