"""Regularity of powers of edge ideals, with whiskered cycles as the test bed."""

from .graph_core import (
    Graph,
    complement,
    cycle,
    g_sub_e,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    path,
    remove_edge,
    whisker_all,
    whiskered_cycle,
)
from .homology_engine import GF2, GF3, FieldPrime, SimplicialComplex, SizeCapError
from .monomial_algebra import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    edge_factorizations,
    edge_ideal,
    polarize,
    power,
)
from .regularity import BettiTable, betti_table, reg_graph, regularity, regularity_squarefree

__version__ = "0.1.0"
