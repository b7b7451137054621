import json

import pytest

from chibound import cli, verify
from chibound.canon import canonical_form
from chibound.detect import is_free
from chibound.graph import cycle, mycielski
from chibound.graph6 import to_graph6

from conftest import graphs_on


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_six(capsys):
    code, out, _ = run(capsys, "gen", "6", "--threads", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 156
    assert lines == [to_graph6(g).decode() for g in graphs_on(6)]


def test_gen_range(capsys):
    assert run(capsys, "gen", "0")[0] == 2
    assert run(capsys, "gen", "11")[0] == 2


def test_verify_chair_p4k1_seven(capsys):
    code, out, err = run(capsys, "verify", "--class", "chair_p4k1", "--max-n", "7", "--threads", "1")
    assert code == 0
    # golden, pinned from the first enumeration run and cross-checked below
    assert err.strip() == "class=chair_p4k1 checked=570 violations=0 tight=12"
    cls = verify.get_class("chair_p4k1")
    members = sum(is_free(g, cls.forbidden) for n in range(1, 8) for g in graphs_on(n))
    assert members == 570 == len(out.splitlines())


def test_verify_bogus_class(capsys):
    code, _, err = run(capsys, "verify", "--class", "bogus", "--max-n", "3")
    assert code == 2 and "bogus" in err


def test_verify_needs_one_source(capsys, tmp_path):
    assert run(capsys, "verify", "--class", "chair_k4")[0] == 2
    f = tmp_path / "g.g6"
    f.write_text("Dhc\n")
    assert run(capsys, "verify", "--class", "chair_k4", "--max-n", "3", "--input", str(f))[0] == 2


def test_verify_input_and_tsv(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_bytes(to_graph6(cycle(5)) + b"\n" + to_graph6(mycielski(cycle(5))) + b"\n")
    dst = tmp_path / "out.tsv"
    code, out, _ = run(capsys, "verify", "--class", "hvn_p3k1", "--input", str(src), "--format", "tsv", "-o", str(dst))
    assert code == 0
    # Grötzsch contains P3 u K1, so only C5 is a member
    assert out.strip() == "class=hvn_p3k1 checked=1 violations=0 tight=1"
    assert dst.read_text().splitlines() == ["graph6\tomega\tchi\tbound_value\tok\ttight", "Dhc\t2\t3\t3\ttrue\ttrue"]


def test_verify_malformed_input(capsys, tmp_path):
    src = tmp_path / "bad.g6"
    src.write_text("Dh\n")
    assert run(capsys, "verify", "--class", "chair_k4", "--input", str(src))[0] == 2
    assert run(capsys, "verify", "--class", "chair_k4", "--input", str(tmp_path / "missing"))[0] == 2


def test_verify_violation_exits_one(capsys, monkeypatch, tmp_path):
    # a class with no forbidden patterns admits the Grötzsch graph, which
    # breaks omega + 1
    loose = verify.GraphClass("loose", 0, frozenset(), verify.Bound.OMEGA_PLUS_1, "test")
    monkeypatch.setattr(verify, "get_class", lambda _: loose)
    src = tmp_path / "g.g6"
    src.write_bytes(to_graph6(mycielski(cycle(5))) + b"\n")
    code, out, err = run(capsys, "verify", "--class", "loose", "--input", str(src))
    assert code == 1
    assert err.strip() == "class=loose checked=1 violations=1 tight=0"
    assert json.loads(out)["ok"] is False


def test_tight(capsys):
    code, out, err = run(capsys, "tight", "--class", "k13_k5e", "--max-n", "5", "--threads", "1")
    assert code == 0
    # under omega + 1 the only tight member on <= 5 vertices is C5
    assert out.split() == [canonical_form(cycle(5))]
    assert err.startswith("class=k13_k5e max_n=5 tight=")


def test_lemma(capsys):
    code, out, err = run(capsys, "lemma", "--max-n", "7", "--threads", "1")
    assert code == 0
    assert len(out.splitlines()) == 18
    assert "violations=0 order=sorted" in err
    code, _, err = run(capsys, "lemma", "--max-n", "6", "--lemma-order", "all", "--threads", "1")
    assert code == 0 and "order=all" in err


def test_lemma_input_skips_non_qualifying(capsys, tmp_path):
    src = tmp_path / "g.g6"
    src.write_bytes(b"Dhc\n" + to_graph6(mycielski(cycle(5))) + b"\n")
    code, out, _ = run(capsys, "lemma", "--input", str(src), "--threads", "1")
    assert code == 0
    (line,) = out.splitlines()
    assert json.loads(line)["graph6"] == "Dhc"


def test_lemma_bad_order(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["lemma", "--max-n", "5", "--lemma-order", "bogus"])
    assert exc.value.code == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "grotzsch")
    assert code == 0
    assert out.strip() == "grotzsch: ω=2 χ=4 claims_ok=true"
    code, out, _ = run(capsys, "witness", "all")
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "witness", "petersen")[0] == 2


def test_threads_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("CHI_THREADS", "nope")
    assert run(capsys, "gen", "4")[0] == 2
    # the flag wins over a bad environment value
    code, out, _ = run(capsys, "gen", "4", "--threads", "2")
    assert code == 0 and len(out.splitlines()) == 11
    monkeypatch.setenv("CHI_THREADS", "2")
    assert run(capsys, "gen", "4")[0] == 0
    assert run(capsys, "gen", "4", "--threads", "0")[0] == 2


def test_output_identical_across_threads(capsys):
    args = ("verify", "--class", "chair_hvn", "--max-n", "6")
    one = run(capsys, *args, "--threads", "1")
    two = run(capsys, *args, "--threads", "2")
    assert one == two
