"""Necessity witnesses: joins of 5-cycles and the Grötzsch graph.

Each witness carries the values claimed for it (clique number, chromatic
number, which patterns occur and which bound it exceeds); the report
recomputes everything and compares.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable

from .detect import contains
from .graph import Graph, cycle, join, mycielski
from .graph6 import to_graph6
from .patterns import Pattern
from .solve import chromatic_number, clique_number
from .verify import Bound


def c5_join(m: int) -> Graph:
    """The join of ``m`` copies of C5."""
    if not 1 <= m <= 3:
        raise ValueError(f"m must be in 1..3, got {m}")
    g = cycle(5)
    for _ in range(m - 1):
        g = join(g, cycle(5))
    return g


def grotzsch() -> Graph:
    return mycielski(cycle(5))


@dataclass(frozen=True)
class Claim:
    build: Callable[[], Graph]
    omega: int
    chi: int
    present: frozenset[Pattern]
    absent: frozenset[Pattern]
    exceeds: Bound


def _c5_join_claim(m: int) -> Claim:
    return Claim(
        build=lambda: c5_join(m),
        omega=2 * m,
        chi=3 * m,
        present=frozenset({Pattern.HVN, Pattern.K5_MINUS_E}),
        absent=frozenset({Pattern.P3_UNION_K1, Pattern.K2_UNION_2K1}),
        exceeds=Bound.OMEGA_PLUS_1,
    )


CLAIMS: dict[str, Claim] = {
    "c5_join_2": _c5_join_claim(2),
    "c5_join_3": _c5_join_claim(3),
    "grotzsch": Claim(
        build=grotzsch,
        omega=2,
        chi=4,
        present=frozenset({Pattern.CHAIR}),
        absent=frozenset({Pattern.P4_PLUS_K1, Pattern.HVN, Pattern.K5_MINUS_E}),
        exceeds=Bound.THREE_HALVES_OMEGA,
    ),
}


@dataclass
class WitnessReport:
    name: str
    graph6: str
    omega: int
    chi: int
    pattern_presence: dict[str, bool]
    claims_ok: bool
    mismatches: list[str] = field(default_factory=list)

    def summary(self) -> str:
        return f"{self.name}: ω={self.omega} χ={self.chi} claims_ok={'true' if self.claims_ok else 'false'}"

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


def witness_report(name: str) -> WitnessReport:
    try:
        claim = CLAIMS[name]
    except KeyError:
        raise KeyError(f"unknown witness {name!r}; known: {', '.join(CLAIMS)}") from None
    g = claim.build()
    omega = clique_number(g)
    chi = chromatic_number(g, omega)
    presence = {p: contains(g, p) for p in Pattern}
    bad = []
    if omega != claim.omega:
        bad.append(f"omega {omega} != {claim.omega}")
    if chi != claim.chi:
        bad.append(f"chi {chi} != {claim.chi}")
    for p in sorted(claim.present, key=list(Pattern).index):
        if not presence[p]:
            bad.append(f"{p.display_name} expected induced, not found")
    for p in sorted(claim.absent, key=list(Pattern).index):
        if presence[p]:
            bad.append(f"{p.display_name} expected absent, found")
    if claim.exceeds.holds(omega, chi):
        bad.append(f"chi {chi} does not exceed {claim.exceeds.value} at omega {omega}")
    return WitnessReport(
        name=name,
        graph6=to_graph6(g).decode("ascii"),
        omega=omega,
        chi=chi,
        pattern_presence={p.value: presence[p] for p in Pattern},
        claims_ok=not bad,
        mismatches=bad,
    )
