"""Class registry and chi-bound verification over graph streams."""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Sequence

from .canon import canonical_form
from .detect import is_free, pattern_profile
from .generate import graphs_up_to
from .graph import Graph
from .graph6 import from_graph6, to_graph6
from .parallel import ordered_map
from .patterns import Pattern
from .solve import chromatic_number, clique_number


class Bound(enum.Enum):
    TWO_OMEGA_MINUS_1 = "2w-1"
    THREE_HALVES_OMEGA = "3w/2"
    OMEGA_PLUS_1 = "w+1"

    def limit(self, omega: int) -> int:
        """Largest chromatic number the bound allows (floor for 3w/2)."""
        if self is Bound.TWO_OMEGA_MINUS_1:
            return 2 * omega - 1
        if self is Bound.THREE_HALVES_OMEGA:
            return 3 * omega // 2
        return omega + 1

    def holds(self, omega: int, chi: int) -> bool:
        if self is Bound.THREE_HALVES_OMEGA:
            return 2 * chi <= 3 * omega
        return chi <= self.limit(omega)


def bound_check(bound: Bound, omega: int, chi: int) -> tuple[bool, int]:
    """``(ok, bound_value)`` for a graph with clique number ``omega`` and
    chromatic number ``chi``."""
    return bound.holds(omega, chi), bound.limit(omega)


@dataclass(frozen=True)
class GraphClass:
    id: str
    number: int
    forbidden: frozenset[Pattern]
    bound: Bound
    source: str  # "direct", "derived" (from a direct class) or "prior result"

    def __str__(self) -> str:
        names = ", ".join(p.display_name for p in sorted(self.forbidden, key=_PATTERN_ORDER.index))
        return f"{self.number}:{self.id} {{{names}}} -> chi <= {self.bound.value}"


_PATTERN_ORDER = list(Pattern)

_P = Pattern
REGISTRY: tuple[GraphClass, ...] = (
    GraphClass("chair_p4k1", 1, frozenset({_P.CHAIR, _P.P4_PLUS_K1}), Bound.TWO_OMEGA_MINUS_1, "direct"),
    GraphClass("k13_p4k1", 2, frozenset({_P.K1_3, _P.P4_PLUS_K1}), Bound.TWO_OMEGA_MINUS_1, "derived"),
    GraphClass("p4k1_p3k1", 3, frozenset({_P.P4_PLUS_K1, _P.P3_UNION_K1}), Bound.THREE_HALVES_OMEGA, "derived"),
    GraphClass("p4k1_k2u2k1", 4, frozenset({_P.P4_PLUS_K1, _P.K2_UNION_2K1}), Bound.THREE_HALVES_OMEGA, "derived"),
    GraphClass("chair_hvn", 5, frozenset({_P.CHAIR, _P.HVN}), Bound.THREE_HALVES_OMEGA, "direct"),
    GraphClass("k13_hvn", 6, frozenset({_P.K1_3, _P.HVN}), Bound.THREE_HALVES_OMEGA, "derived"),
    GraphClass("hvn_p3k1", 7, frozenset({_P.HVN, _P.P3_UNION_K1}), Bound.OMEGA_PLUS_1, "derived"),
    GraphClass("hvn_k2u2k1", 8, frozenset({_P.HVN, _P.K2_UNION_2K1}), Bound.OMEGA_PLUS_1, "derived"),
    GraphClass("chair_k4", 9, frozenset({_P.CHAIR, _P.K4}), Bound.OMEGA_PLUS_1, "derived"),
    GraphClass("k5e_p3k1", 10, frozenset({_P.K5_MINUS_E, _P.P3_UNION_K1}), Bound.OMEGA_PLUS_1, "direct"),
    GraphClass("k5e_k2u2k1", 11, frozenset({_P.K5_MINUS_E, _P.K2_UNION_2K1}), Bound.OMEGA_PLUS_1, "direct"),
    GraphClass("k13_k5e", 12, frozenset({_P.K1_3, _P.K5_MINUS_E}), Bound.OMEGA_PLUS_1, "prior result"),
)
del _P


def get_class(key: str | int) -> GraphClass:
    """Look a class up by id (``"chair_p4k1"``) or registry number (``1`` / ``"1"``)."""
    for c in REGISTRY:
        if key == c.id or str(key) == str(c.number):
            return c
    raise KeyError(f"unknown class {key!r}; known: {', '.join(c.id for c in REGISTRY)}")


def membership(g: Graph, cls: GraphClass) -> bool:
    return is_free(g, cls.forbidden)


@dataclass(frozen=True)
class VerificationRecord:
    graph6: str
    omega: int
    chi: int
    bound_value: int
    ok: bool
    tight: bool


@dataclass
class Report:
    cls: GraphClass
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def violations(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.ok]

    @property
    def tight_examples(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.tight]

    def summary(self) -> str:
        return (
            f"class={self.cls.id} checked={self.checked} "
            f"violations={len(self.violations)} tight={len(self.tight_examples)}"
        )


def _record(g: Graph, bound: Bound, omega: int, chi: int) -> VerificationRecord:
    ok, value = bound_check(bound, omega, chi)
    return VerificationRecord(to_graph6(g).decode("ascii"), omega, chi, value, ok, chi == value)


def _check_one(args: tuple[Graph, GraphClass]) -> tuple[tuple[int, str], VerificationRecord] | None:
    g, cls = args
    if not membership(g, cls):
        return None
    omega = clique_number(g)
    chi = chromatic_number(g, omega)
    return (g.n, canonical_form(g)), _record(g, cls.bound, omega, chi)


def verify_class(cls: GraphClass, stream: Iterable[Graph], workers: int = 1) -> Report:
    """One record per in-class graph of ``stream``, sorted by (n, canonical form)."""
    results = ordered_map(_check_one, ((g, cls) for g in stream), workers)
    keyed = sorted((r for r in results if r is not None), key=lambda kr: kr[0])
    return Report(cls, [rec for _, rec in keyed])


@dataclass(frozen=True)
class GraphFacts:
    """Everything the registry needs to know about one graph."""

    n: int
    canon: str
    omega: int
    chi: int
    present: frozenset[Pattern]

    def member(self, cls: GraphClass) -> bool:
        return not (cls.forbidden & self.present)


def analyze(g: Graph) -> GraphFacts:
    omega = clique_number(g)
    return GraphFacts(g.n, canonical_form(g), omega, chromatic_number(g, omega), pattern_profile(g))


def survey(n_max: int, workers: int = 1) -> list[GraphFacts]:
    """Facts for every isomorphism class on 1..n_max vertices, sorted."""
    facts = list(ordered_map(analyze, graphs_up_to(n_max), workers, chunksize=256))
    facts.sort(key=lambda f: (f.n, f.canon))
    return facts


def verify_registry(facts: Sequence[GraphFacts], classes: Sequence[GraphClass] = REGISTRY) -> dict[str, tuple[int, list[GraphFacts], list[GraphFacts]]]:
    """Per class id: (members checked, violating graphs, tight graphs)."""
    out = {}
    for cls in classes:
        checked = 0
        bad: list[GraphFacts] = []
        tight: list[GraphFacts] = []
        for f in facts:
            if not f.member(cls):
                continue
            checked += 1
            if not cls.bound.holds(f.omega, f.chi):
                bad.append(f)
            elif f.chi == cls.bound.limit(f.omega):
                tight.append(f)
        out[cls.id] = (checked, bad, tight)
    return out


def find_tight(cls: GraphClass, n_max: int, workers: int = 1) -> list[str]:
    """Canonical graph6 of every class member on <= n_max vertices whose
    chromatic number equals the bound value, sorted by (n, canonical form)."""
    if not 1 <= n_max <= 10:
        raise ValueError("n_max must be in 1..10")
    report = verify_class(cls, graphs_up_to(n_max, workers), workers)
    out = []
    for rec in report.records:
        if rec.tight:
            out.append(canonical_form(from_graph6(rec.graph6)))
    return out


# -- report output -----------------------------------------------------------

FIELDS = ("graph6", "omega", "chi", "bound_value", "ok", "tight")


def write_records(records: Iterable[VerificationRecord], sink: IO[str], fmt: str = "jsonl") -> None:
    if fmt == "jsonl":
        for r in records:
            sink.write(json.dumps(asdict(r)) + "\n")
    elif fmt == "tsv":
        sink.write("\t".join(FIELDS) + "\n")
        for r in records:
            row = asdict(r)
            sink.write("\t".join(_tsv(row[k]) for k in FIELDS) + "\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def _tsv(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def read_records(lines: Iterable[str]) -> list[VerificationRecord]:
    return [VerificationRecord(**json.loads(line)) for line in lines if line.strip()]
