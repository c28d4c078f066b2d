"""Equality, idempotents and endomorphisms of Hecke–Kiselman monoids HK_Θ."""

from .graph import (
    OrientedGraph,
    acyclic_subsets,
    automorphisms,
    is_acyclic,
    members,
    parse_graph,
    predicate_p,
    reachable,
    topological_order,
    vset,
)
from .words import content, hk_equal, normalize, trace_canonical
from .idempotents import idempotent_word, enumerate_idempotents, mnrs_partition
from .endo import enumerate_endomorphisms, is_pure, psi, star
from .kiselman import kiselman_graph

__version__ = "0.1.0"
