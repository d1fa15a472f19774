"""Girths of simplicial complexes, walk counts, random high-girth complexes and
the face-number bounds that tie them together."""

__version__ = "0.1.0"

from .complex import SimplicialComplex, cone, flag_completion, from_facets, suspension
from .errors import (
    BudgetExceeded,
    CertificationError,
    ConvergenceError,
    DomainError,
    GirthlabError,
    ScxParseError,
    VerificationError,
)
from .girth import (
    INF,
    GirthWitness,
    girth,
    girth_all,
    girth_exceeds,
    girth_flag_fast,
    graph_girth,
    minimal_homology_support,
    verify_witness,
)
from .homology import (
    BettiVector,
    boundary_matrix,
    betti_vector,
    euler_characteristic,
    rank,
    rank_mod_p,
    reduced_betti,
)
from .scx import emit_scx, parse_scx, read_provenance
from .stanley_reisner import (
    BettiTable,
    ShiftProfile,
    betti_table,
    check_girth_link,
    g_prime,
    minimal_nonfaces,
    shift_profile,
)
from .bounds import (
    BoundReport,
    a_exponent,
    existence_floor_2d,
    existence_floor_crosspoly,
    f1_bound,
    fi_bound,
    gen_conjecture_bound,
    moore_bound,
    multiplicity_bound,
)
from .walks import (
    EdgeWeightSystem,
    admissible_arcs,
    count_non_returning_walks,
    stable_weights,
    tree_lemma_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
