import json

import pytest

from chibound.canon import canonical_form
from chibound.graph import complete, cycle, empty, join, make, path
from chibound.graph6 import from_graph6
from chibound.lemma import (
    LemmaContext,
    LemmaPreconditionError,
    LemmaViolation,
    check_clause_a,
    check_clause_b,
    check_graph,
    clause_a_violations,
    clause_b_violations,
    critical_chair_free_stream,
    lemma_select,
    missing_colors,
    replay,
    run_lemma,
)
from chibound.solve import chromatic_number
from chibound.witnesses import grotzsch

from oracles import raw_lemma_score

W5 = join(cycle(5), complete(1))


@pytest.fixture(scope="module")
def critical7():
    return list(critical_chair_free_stream(7))


def test_c5_selection():
    ctxs = lemma_select(cycle(5))
    assert ctxs
    for ctx in ctxs:
        assert len(ctx.unique) == 2
        assert ctx.repeat_colors == () and ctx.counts == ()


def test_k4_selection():
    for ctx in lemma_select(complete(4)):
        assert len(ctx.unique) == 3 and ctx.repeat_colors == ()


def test_w5_selection_and_clauses():
    # a rim vertex sees the hub and two differently coloured path ends
    ctxs = lemma_select(W5)
    assert ctxs and all(ctx.u != 5 for ctx in ctxs)
    assert {ctx.score for ctx in ctxs} == {(3, ())}
    for ctx in ctxs:
        assert check_clause_a(W5, ctx) is None
        assert check_clause_b(W5, ctx, "all") is None


def test_selection_with_repeat_colour():
    # the only critical Chair-free graph on <= 7 vertices whose optimum keeps a
    # repeated colour
    g = from_graph6("FUzro")
    ctxs = lemma_select(g)
    assert {ctx.score for ctx in ctxs} == {(2, (-2,))}
    for ctx in ctxs:
        assert len(ctx.repeat_colors) == 1
        assert clause_a_violations(g, ctx) == []
        assert clause_b_violations(g, ctx, "all") == []


def test_context_shape():
    for ctx in lemma_select(W5):
        assert ctx.coloring[ctx.u] == -1
        assert list(ctx.counts) == sorted(ctx.counts)
        assert all(c >= 2 for c in ctx.counts)
        assert list(ctx.unique) == sorted(ctx.unique)


def test_preconditions():
    with pytest.raises(LemmaPreconditionError):
        lemma_select(grotzsch())  # contains a Chair
    with pytest.raises(LemmaPreconditionError):
        lemma_select(path(4))  # not critical
    with pytest.raises(LemmaPreconditionError):
        lemma_select(empty(0))


def test_stream_contents(critical7):
    forms = {canonical_form(g) for g in critical7}
    expected = [cycle(5), cycle(7), W5] + [complete(m) for m in range(1, 8)]
    for g in expected:
        assert canonical_form(g) in forms
    assert len(forms) == len(critical7) == 18
    assert canonical_form(path(3)) not in forms


@pytest.mark.parametrize("ordering", ["sorted", "all"])
def test_clauses_hold_up_to_seven(critical7, ordering):
    results = run_lemma(critical7, ordering)
    assert len(results) == len(critical7)
    assert all(r.ok and r.clause_a == r.clause_b == "ok" for r in results)
    assert all(r.ordering == ordering for r in results)


def test_every_optimal_context_sees_all_colours(critical7):
    for g in critical7:
        k = chromatic_number(g) - 1
        for ctx in lemma_select(g):
            assert missing_colors(g, ctx, k) == []


def test_quotient_matches_raw_enumeration(critical7):
    # colourings are enumerated up to colour permutation; the raw oracle tries
    # every assignment
    for g in critical7:
        if g.n > 6:
            continue
        chi = chromatic_number(g)
        assert lemma_select(g, chi)[0].score == raw_lemma_score(g, chi)


def test_score_invariant_under_relabelling(critical7):
    for g in critical7:
        perm = list(range(g.n))[::-1]
        h = g.relabel(perm)
        assert lemma_select(g)[0].score == lemma_select(h)[0].score
        assert len(lemma_select(g)) == len(lemma_select(h))


def _star_context():
    # u = 0 with neighbours 1, 2 (colour 0) and 3 (colour 1), no other edges
    g = make(4, [(0, 1), (0, 2), (0, 3)])
    ctx = LemmaContext(0, (-1, 0, 0, 1), (3,), (0,), (2,))
    return g, ctx


def test_clause_a_violation_and_replay():
    g, ctx = _star_context()
    v = check_clause_a(g, ctx)
    assert v == LemmaViolation("A", 0, 3, 0)
    assert replay(g, v, ctx)
    assert not replay(g, LemmaViolation("A", 0, 1, 0), ctx)


def test_clause_b_orderings():
    # two repeat colours with equal counts: "sorted" constrains 0 -> 1 only,
    # "all" also constrains 1 -> 0
    g = make(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    ctx = LemmaContext(0, (-1, 0, 0, 1, 1), (), (0, 1), (2, 2))
    sorted_v = clause_b_violations(g, ctx, "sorted")
    all_v = clause_b_violations(g, ctx, "all")
    assert {(v.vertex, v.missing_color) for v in sorted_v} == {(1, 1), (2, 1)}
    assert {(v.vertex, v.missing_color) for v in all_v} == {(1, 1), (2, 1), (3, 0), (4, 0)}
    assert all(replay(g, v, ctx) for v in all_v)
    assert clause_a_violations(g, ctx) == []
    with pytest.raises(ValueError):
        clause_b_violations(g, ctx, "bogus")


def _pairs(violations):
    return [(v.vertex, v.missing_color) for v in violations]


def test_clause_b_respects_counts_under_all():
    # counts (2, 3): the larger class is never "earlier" under either ordering
    g = make(6, [(0, x) for x in range(1, 6)])
    ctx = LemmaContext(0, (-1, 0, 0, 1, 1, 1), (), (0, 1), (2, 3))
    assert _pairs(clause_b_violations(g, ctx, "sorted")) == _pairs(clause_b_violations(g, ctx, "all"))


def test_result_json_and_ordering(critical7):
    results = run_lemma(critical7[::-1])
    keys = [(r.n, canonical_form(from_graph6(r.graph6))) for r in results]
    assert keys == sorted(keys)
    rec = json.loads(check_graph(W5).to_json())
    assert rec["chi"] == 4 and rec["clause_a"] == "ok" and rec["violations"] == []
    with pytest.raises(ValueError):
        run_lemma([], "bogus")


def test_parallel_identical(critical7):
    assert run_lemma(critical7, workers=2) == run_lemma(critical7)


def test_stream_range():
    with pytest.raises(ValueError):
        next(critical_chair_free_stream(10))
