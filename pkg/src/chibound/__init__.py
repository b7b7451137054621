"""Exhaustive checks of linear chi-bounds for graph classes defined by
forbidden induced subgraphs (Chair, P4+K1, HVN, K5-e and relatives)."""

from .canon import canonical_form, is_isomorphic
from .detect import find_induced, is_free
from .generate import all_graphs, filter_free, graphs_up_to
from .graph import (
    Graph,
    GraphError,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    induced,
    join,
    make,
    mycielski,
    path,
)
from .graph6 import from_graph6, to_graph6
from .patterns import Pattern
from .solve import chromatic_number, clique_number, enumerate_colorings, is_k_colorable, is_vertex_critical
from .lemma import check_clause_a, check_clause_b, lemma_select, run_lemma
from .verify import (
    REGISTRY,
    Bound,
    GraphClass,
    bound_check,
    find_tight,
    get_class,
    membership,
    survey,
    verify_class,
)
from .witnesses import c5_join, grotzsch, witness_report

__version__ = "0.1.0"
