"""Exact invariants of clique complexes and edge ideals: graded Betti
tables, depth, vertex connectivity, second powers, and a verification CLI.
"""

from .graphs import (
    ConnectivityResult,
    Graph,
    GuardError,
    ParseError,
    is_chordal,
    minimal_vertex_covers,
    parse_graph,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from .complexes import (
    SimplicialComplex,
    clique_complex,
    complex_from_squarefree_ideal,
    is_cone,
    link,
    restrict,
    stanley_reisner_ideal,
)
from .homology import GF2, GF3, RATIONAL, BettiVector, FieldSpec, reduced_betti
from .betti import (
    BettiTable,
    DepthResult,
    depth_monomial_quotient,
    depth_stanley_reisner,
    graded_betti_table,
    graph_depth,
    kappa_via_betti,
)
from .monomials import (
    MonomialIdeal,
    Polarization,
    colon,
    colon_square_structure,
    edge_ideal,
    intersection,
    minimalize,
    parse_ideal,
    polarize,
    power,
    product,
    symbolic_power,
)
from .verify import (
    BoundSet,
    FuzzFailure,
    SearchResult,
    VerificationReport,
    bounds,
    construct_example,
    fuzz_campaign,
    lemma_arithmetic,
    search_depth2,
    verify_graph,
)

__version__ = "0.1.0"
