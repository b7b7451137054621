"""Catalog of the forbidden induced subgraphs used by the class registry.

Vertex numbering in each catalog graph keeps every prefix connected where
the pattern itself is connected, which lets the induced-subgraph search
constrain candidates early.
"""

from __future__ import annotations

import enum
from functools import cached_property

from .graph import Graph, make


class Pattern(enum.Enum):
    CHAIR = "chair"
    P4_PLUS_K1 = "p4k1"
    HVN = "hvn"
    K5_MINUS_E = "k5e"
    P3_UNION_K1 = "p3k1"
    K2_UNION_2K1 = "k2u2k1"
    K1_3 = "k13"
    K4 = "k4"

    @cached_property
    def graph(self) -> Graph:
        n, edges = _CATALOG[self]
        return make(n, edges)

    @property
    def display_name(self) -> str:
        return _DISPLAY[self]

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        key = text.strip().lower().replace("-", "").replace("+", "").replace("_", "")
        for p in cls:
            if key in (p.value, p.display_name.lower().replace("-", "").replace("+", "")):
                return p
        raise ValueError(f"unknown pattern {text!r}")


_CATALOG: dict[Pattern, tuple[int, list[tuple[int, int]]]] = {
    # claw 0;1,2,3 with the edge 0-3 subdivided by 4
    Pattern.CHAIR: (5, [(0, 1), (0, 2), (0, 3), (3, 4)]),
    # '+' is the join: P4 0-1-2-3 with 4 dominating (the gem)
    Pattern.P4_PLUS_K1: (5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    # K4 on 0..3, vertex 4 sees exactly 0 and 1
    Pattern.HVN: (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]),
    Pattern.K5_MINUS_E: (5, [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (3, 4)]),
    Pattern.P3_UNION_K1: (4, [(0, 1), (1, 2)]),
    Pattern.K2_UNION_2K1: (4, [(0, 1)]),
    Pattern.K1_3: (4, [(0, 1), (0, 2), (0, 3)]),
    Pattern.K4: (4, [(a, b) for a in range(4) for b in range(a + 1, 4)]),
}

_DISPLAY = {
    Pattern.CHAIR: "Chair",
    Pattern.P4_PLUS_K1: "P4+K1",
    Pattern.HVN: "HVN",
    Pattern.K5_MINUS_E: "K5-e",
    Pattern.P3_UNION_K1: "P3uK1",
    Pattern.K2_UNION_2K1: "K2u2K1",
    Pattern.K1_3: "K1,3",
    Pattern.K4: "K4",
}
