import io
import json

import pytest
from hypothesis import given, settings

from chibound.canon import canonical_form
from chibound.graph import cycle, join, mycielski
from chibound.graph6 import from_graph6, to_graph6
from chibound.patterns import Pattern
from chibound.verify import (
    REGISTRY,
    Bound,
    GraphClass,
    bound_check,
    find_tight,
    get_class,
    membership,
    read_records,
    survey,
    verify_class,
    verify_registry,
    write_records,
)

from strategies import graphs

P = Pattern
EXPECTED_REGISTRY = [
    ({P.CHAIR, P.P4_PLUS_K1}, Bound.TWO_OMEGA_MINUS_1),
    ({P.K1_3, P.P4_PLUS_K1}, Bound.TWO_OMEGA_MINUS_1),
    ({P.P4_PLUS_K1, P.P3_UNION_K1}, Bound.THREE_HALVES_OMEGA),
    ({P.P4_PLUS_K1, P.K2_UNION_2K1}, Bound.THREE_HALVES_OMEGA),
    ({P.CHAIR, P.HVN}, Bound.THREE_HALVES_OMEGA),
    ({P.K1_3, P.HVN}, Bound.THREE_HALVES_OMEGA),
    ({P.HVN, P.P3_UNION_K1}, Bound.OMEGA_PLUS_1),
    ({P.HVN, P.K2_UNION_2K1}, Bound.OMEGA_PLUS_1),
    ({P.CHAIR, P.K4}, Bound.OMEGA_PLUS_1),
    ({P.K5_MINUS_E, P.P3_UNION_K1}, Bound.OMEGA_PLUS_1),
    ({P.K5_MINUS_E, P.K2_UNION_2K1}, Bound.OMEGA_PLUS_1),
    ({P.K1_3, P.K5_MINUS_E}, Bound.OMEGA_PLUS_1),
]


def test_registry_contents():
    assert len(REGISTRY) == 12
    for i, (cls, (forbidden, bound)) in enumerate(zip(REGISTRY, EXPECTED_REGISTRY), start=1):
        assert cls.number == i
        assert cls.forbidden == frozenset(forbidden)
        assert cls.bound is bound
    assert len({c.id for c in REGISTRY}) == 12


def test_get_class():
    assert get_class("k5e_k2u2k1").number == 11
    assert get_class(3).id == "p4k1_p3k1"
    assert get_class("12").id == "k13_k5e"
    with pytest.raises(KeyError):
        get_class("bogus")


def test_bound_check_examples():
    assert bound_check(Bound.THREE_HALVES_OMEGA, 2, 3) == (True, 3)
    assert bound_check(Bound.TWO_OMEGA_MINUS_1, 1, 1) == (True, 1)
    assert bound_check(Bound.OMEGA_PLUS_1, 2, 4) == (False, 3)
    # 3w/2 read literally: 2*chi <= 3*omega
    assert bound_check(Bound.THREE_HALVES_OMEGA, 3, 4) == (True, 4)
    assert bound_check(Bound.THREE_HALVES_OMEGA, 3, 5) == (False, 4)
    assert bound_check(Bound.TWO_OMEGA_MINUS_1, 2, 4) == (False, 3)


@pytest.mark.parametrize("bound", list(Bound))
def test_bound_limit_is_floor(bound):
    for omega in range(0, 12):
        for chi in range(0, 25):
            ok, value = bound_check(bound, omega, chi)
            assert ok == (chi <= value)


def test_membership_examples():
    grotzsch = mycielski(cycle(5))
    assert not membership(grotzsch, get_class("p4k1_p3k1"))
    assert not membership(join(cycle(5), cycle(5)), get_class("hvn_p3k1"))
    for cls in REGISTRY:
        assert membership(cycle(5), cls)


def test_verify_class_c5_tight():
    report = verify_class(get_class("hvn_p3k1"), [cycle(5)])
    assert report.checked == 1
    (rec,) = report.tight_examples
    assert (rec.graph6, rec.omega, rec.chi, rec.bound_value, rec.ok, rec.tight) == ("Dhc", 2, 3, 3, True, True)
    assert report.summary() == "class=hvn_p3k1 checked=1 violations=0 tight=1"


def test_violations_are_data_not_errors():
    unrestricted = GraphClass("all_graphs", 0, frozenset(), Bound.OMEGA_PLUS_1, "test")
    report = verify_class(unrestricted, [mycielski(cycle(5)), cycle(5)])
    assert report.checked == 2
    (bad,) = report.violations
    assert (bad.omega, bad.chi, bad.bound_value, bad.ok, bad.tight) == (2, 4, 3, False, False)
    assert "violations=1" in report.summary()


def test_witnesses_are_not_members_of_the_classes_they_break():
    report = verify_class(get_class("k5e_p3k1"), [mycielski(cycle(5)), join(cycle(5), cycle(5))])
    assert report.checked == 0


@pytest.mark.parametrize("cid", ["chair_p4k1", "k5e_p3k1"])
def test_verify_class_small_exhaustive(cid, small_graphs):
    stream = [g for n in range(1, 8) for g in small_graphs[n]]
    report = verify_class(get_class(cid), stream)
    assert report.checked > 0
    assert report.violations == []
    assert all(r.ok for r in report.records)


def test_records_sorted_by_order_and_canonical_form(small_graphs):
    stream = list(reversed(small_graphs[5] + small_graphs[4]))
    report = verify_class(get_class("chair_hvn"), stream)
    keys = [(from_graph6(r.graph6).n, canonical_form(from_graph6(r.graph6))) for r in report.records]
    assert keys == sorted(keys)


def test_find_tight_contains_c5():
    c5 = canonical_form(cycle(5))
    for cid in ("p4k1_p3k1", "chair_k4", "chair_p4k1"):
        tight = find_tight(get_class(cid), 5)
        assert c5 in tight
    tight = find_tight(get_class("chair_k4"), 5)
    assert tight == sorted(tight)  # graph6 leads with the order byte


def test_subsumption():
    facts = survey(6)
    members = {c.id: {f.canon for f in facts if f.member(c)} for c in REGISTRY}
    assert members["k13_p4k1"] <= members["chair_p4k1"]
    assert members["k13_hvn"] <= members["chair_hvn"]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_k4_free_implies_hvn_k5e_free_membership(g):
    if membership(g, get_class("chair_k4")):
        assert membership(g, get_class("chair_hvn"))


def test_necessity_witnesses_outside_classes():
    h = join(cycle(5), cycle(5))
    for cls in REGISTRY:
        if cls.bound is Bound.OMEGA_PLUS_1:
            assert not membership(h, cls)
    grotzsch = mycielski(cycle(5))
    for cls in REGISTRY:
        if P.CHAIR in cls.forbidden:
            assert not membership(grotzsch, cls)


def test_registry_sweep_six():
    facts = survey(6)
    results = verify_registry(facts)
    for cid, (checked, bad, tight) in results.items():
        assert checked > 0
        assert bad == []


@pytest.mark.parametrize("fmt", ["jsonl", "tsv"])
def test_report_formats(fmt):
    report = verify_class(get_class("chair_k4"), [cycle(5), cycle(7)])
    buf = io.StringIO()
    write_records(report.records, buf, fmt)
    lines = buf.getvalue().splitlines()
    if fmt == "jsonl":
        first = json.loads(lines[0])
        assert list(first) == ["graph6", "omega", "chi", "bound_value", "ok", "tight"]
        assert read_records(lines) == report.records
    else:
        assert lines[0] == "graph6\tomega\tchi\tbound_value\tok\ttight"
        assert lines[1] == "Dhc\t2\t3\t3\ttrue\ttrue"
    with pytest.raises(ValueError):
        write_records(report.records, buf, "xml")


def test_graph6_field_is_input_labeling():
    g = cycle(5).relabel([2, 0, 4, 1, 3])
    rec = verify_class(get_class("chair_k4"), [g]).records[0]
    assert rec.graph6 == to_graph6(g).decode()
