"""Extremal (vertex, colouring) selection on critical Chair-free graphs and
the two neighbourhood clauses that must hold for every optimal choice.

For a vertex ``u`` and a proper (chi - 1)-colouring of ``G - u``, the colours
seen in ``N(u)`` split into *unique* colours (exactly one neighbour) and
*repeat* colours. A choice is scored by the number of unique colours (higher
is better) and then by the ascending list of repeat-colour multiplicities
(lexicographically smaller is better). Every optimal choice is checked:

* clause A: each uniquely coloured neighbour sees every repeat colour inside
  ``N(u)``;
* clause B: each neighbour with repeat colour ``a_i`` sees every later repeat
  colour ``a_k`` (``k > i``) inside ``N(u)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .canon import canonical_form
from .detect import find_induced
from .generate import graphs_up_to
from .graph import Graph, iter_bits
from .graph6 import to_graph6
from .parallel import ordered_map
from .patterns import Pattern
from .solve import chromatic_number, is_vertex_critical, iter_color_tuples

ORDERINGS = ("sorted", "all")


class LemmaPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class LemmaContext:
    u: int
    coloring: tuple[int, ...]  # indexed by vertices of G; u carries -1
    unique: tuple[int, ...]  # R, ascending
    repeat_colors: tuple[int, ...]  # a_1, a_2, ... by (count, colour index)
    counts: tuple[int, ...]  # N_1 <= N_2 <= ...

    @property
    def score(self) -> tuple[int, tuple[int, ...]]:
        return len(self.unique), tuple(-c for c in self.counts)


@dataclass(frozen=True)
class LemmaViolation:
    clause: str
    u: int
    vertex: int
    missing_color: int
    ordering: str = "sorted"


def _contexts_for(g: Graph, k: int) -> Iterator[LemmaContext]:
    n = g.n
    for u in range(n):
        h = g.remove_vertex(u)
        nbrs = list(iter_bits(g.adj[u]))
        for cols in iter_color_tuples(h, k):
            full = cols[:u] + (-1,) + cols[u:]
            count: dict[int, int] = {}
            for x in nbrs:
                c = full[x]
                count[c] = count.get(c, 0) + 1
            unique = tuple(x for x in nbrs if count[full[x]] == 1)
            reps = sorted((m, c) for c, m in count.items() if m >= 2)
            yield LemmaContext(u, full, unique, tuple(c for _, c in reps), tuple(m for m, _ in reps))


def lemma_select(g: Graph, chi: int | None = None) -> list[LemmaContext]:
    """All (u, colouring) contexts attaining the optimal score.

    Colourings of ``G - u`` are enumerated once per colour permutation; the
    score does not depend on colour names.
    """
    if g.n == 0:
        raise LemmaPreconditionError("empty graph")
    if chi is None:
        chi = chromatic_number(g)
    if find_induced(g, Pattern.CHAIR) is not None:
        raise LemmaPreconditionError("graph contains an induced Chair")
    if not is_vertex_critical(g, chi):
        raise LemmaPreconditionError("graph is not vertex-critical")
    best: list[LemmaContext] = []
    best_score = None
    for ctx in _contexts_for(g, chi - 1):
        s = ctx.score
        if best_score is None or s > best_score:
            best_score = s
            best = [ctx]
        elif s == best_score:
            best.append(ctx)
    return best


def _sees(g: Graph, ctx: LemmaContext, x: int, color: int) -> bool:
    for y in iter_bits(g.adj[x] & g.adj[ctx.u]):
        if ctx.coloring[y] == color:
            return True
    return False


def clause_a_violations(g: Graph, ctx: LemmaContext) -> list[LemmaViolation]:
    return [
        LemmaViolation("A", ctx.u, x, a)
        for x in ctx.unique
        for a in ctx.repeat_colors
        if not _sees(g, ctx, x, a)
    ]


def _later_pairs(ctx: LemmaContext, ordering: str) -> Iterator[tuple[int, int]]:
    # (earlier colour, later colour) pairs that clause B constrains
    reps = ctx.repeat_colors
    if ordering == "sorted":
        for i, j in itertools.combinations(range(len(reps)), 2):
            yield reps[i], reps[j]
    elif ordering == "all":
        # every tie-break among equal counts: any pair with count(later) >= count(earlier)
        for i, j in itertools.permutations(range(len(reps)), 2):
            if ctx.counts[j] >= ctx.counts[i]:
                yield reps[i], reps[j]
    else:
        raise ValueError(f"ordering must be one of {ORDERINGS}")


def clause_b_violations(g: Graph, ctx: LemmaContext, ordering: str = "sorted") -> list[LemmaViolation]:
    out = []
    for early, late in _later_pairs(ctx, ordering):
        for y in iter_bits(g.adj[ctx.u]):
            if ctx.coloring[y] == early and not _sees(g, ctx, y, late):
                out.append(LemmaViolation("B", ctx.u, y, late, ordering))
    return out


def check_clause_a(g: Graph, ctx: LemmaContext) -> LemmaViolation | None:
    """First clause-A violation of ``ctx``, or ``None``."""
    v = clause_a_violations(g, ctx)
    return v[0] if v else None


def check_clause_b(g: Graph, ctx: LemmaContext, ordering: str = "sorted") -> LemmaViolation | None:
    v = clause_b_violations(g, ctx, ordering)
    return v[0] if v else None


def missing_colors(g: Graph, ctx: LemmaContext, k: int) -> list[int]:
    """Colours among ``0..k-1`` absent from ``N(u)`` (empty for critical graphs)."""
    present = {ctx.coloring[x] for x in iter_bits(g.adj[ctx.u])}
    return [c for c in range(k) if c not in present]


def is_critical_chair_free(g: Graph) -> bool:
    if find_induced(g, Pattern.CHAIR) is not None:
        return False
    return is_vertex_critical(g)


def critical_chair_free_stream(n_max: int, workers: int = 1) -> Iterator[Graph]:
    """Vertex-critical Chair-free graphs on 1..n_max vertices, one per
    isomorphism class."""
    if not 1 <= n_max <= 9:
        raise ValueError("n_max must be in 1..9")
    graphs = graphs_up_to(n_max)
    if workers > 1:
        graphs = list(graphs)
        keep = ordered_map(is_critical_chair_free, graphs, workers, chunksize=256)
        yield from (g for g, ok in zip(graphs, keep) if ok)
    else:
        yield from (g for g in graphs if is_critical_chair_free(g))


@dataclass
class LemmaResult:
    graph6: str
    n: int
    chi: int
    contexts: int
    clause_a: str
    clause_b: str
    ordering: str
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def check_graph(g: Graph, ordering: str = "sorted") -> LemmaResult:
    chi = chromatic_number(g)
    ctxs = lemma_select(g, chi)
    viol_a: list[LemmaViolation] = []
    viol_b: list[LemmaViolation] = []
    for ctx in ctxs:
        viol_a.extend(clause_a_violations(g, ctx))
        viol_b.extend(clause_b_violations(g, ctx, ordering))
    return LemmaResult(
        graph6=to_graph6(g).decode("ascii"),
        n=g.n,
        chi=chi,
        contexts=len(ctxs),
        clause_a="ok" if not viol_a else "violated",
        clause_b="ok" if not viol_b else "violated",
        ordering=ordering,
        violations=[asdict(v) for v in viol_a + viol_b],
    )


def _check_keyed(args: tuple[Graph, str]) -> tuple[tuple[int, str], LemmaResult]:
    g, ordering = args
    return (g.n, canonical_form(g)), check_graph(g, ordering)


def run_lemma(graphs: Iterable[Graph], ordering: str = "sorted", workers: int = 1) -> list[LemmaResult]:
    """Check every graph; results sorted by (n, canonical form)."""
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}")
    keyed = list(ordered_map(_check_keyed, ((g, ordering) for g in graphs), workers, chunksize=8))
    keyed.sort(key=lambda kr: kr[0])
    return [r for _, r in keyed]


def replay(g: Graph, violation: LemmaViolation, ctx: LemmaContext) -> bool:
    """True iff re-checking ``ctx`` reproduces ``violation``."""
    if violation.clause == "A":
        return violation in clause_a_violations(g, ctx)
    return violation in clause_b_violations(g, ctx, violation.ordering)
