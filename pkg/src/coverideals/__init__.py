"""Hypergraph colorings and associated primes of powers of cover ideals.

Chromatic numbers are computed as a monomial membership question, the
associated primes of J^s through generalized Alexander duality, and graph
perfection through a finite algebraic test. Every algebraic route has a
brute-force combinatorial counterpart in :mod:`coverideals.coloring` and
friends to check it against.
"""

from .catalog import antihole, complete, cycle, path, six_vertex_example
from .coloring import (
    Coloring,
    b_fold_chromatic,
    chromatic_number,
    is_critically_chromatic,
    is_independent,
    is_proper,
    is_vertex_cover,
)
from .covers import cover_ideal, edge_ideal, minimal_vertex_covers
from .hypergraph import (
    ExpandedHypergraph,
    ExpansionVertex,
    Hypergraph,
    HypergraphError,
    complement,
    depolarize,
    expansion,
    induced,
    is_clique,
    is_graph,
    is_simplicial,
    neighbors,
    validate,
)
from .invariants import (
    AssReport,
    BudgetExceeded,
    chi_algebraic,
    chi_b_algebraic,
    dual_of_power,
    expansion_witness,
    localize_check,
    persistence_scan,
    secant_generators,
    stabilization_union,
)
from .kernels import BACKEND
from .monomial import (
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    associated_primes_witness,
    colon,
    contains,
    intersect,
    irreducible_decomposition,
    minimalize,
    multiply,
    power,
)
from .perfect import (
    PerfectionCertificate,
    is_minimal_imperfect,
    is_perfect_algebraic,
    is_perfect_bruteforce,
    saturated_chain_check,
    simplicial_ass_classification,
)

__version__ = "0.1.0"
