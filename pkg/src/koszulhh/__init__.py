"""Exact homological algebra over GF(2) for Boolean connected sums.

The package builds graded algebras from free generators and Boolean ring
atoms, computes their bigraded Hochschild cohomology through an admissible
sequence model with a bar-complex cross-check, constructs explicit
primitives for cocycles in the vanishing range, and carries Massey product
defining systems across surjective quasi-isomorphisms.
"""

from .algebra import (
    BooleanRing,
    ConnectedSumAlgebra,
    GradedElement,
    Subring,
    adjoin,
    boolean_ring,
    connected_sum_algebra,
    graded_multiply,
    ideal_decompose,
    ideal_membership,
)
from .caps import default_cap
from .coboundary import (
    HeadTail,
    Orbit,
    bottom_cocycles,
    drop_first,
    drop_last,
    extend_cocycle,
    extend_cocycle_split,
    head_tail,
    is_stable,
    orbit_decomposition,
    restrict_cochain,
    rotate_back,
    rotate_forward,
    solve_coboundary,
)
from .errors import CapExceeded, InvalidDefiningSystemError, NotACocycleError
from .gf2 import BitMatrix, BitVector, echelon_rank, kernel_basis, rank, solve, sparse_rank
from .hochschild import (
    BarFactor,
    BarReport,
    Cochain,
    HhReport,
    HochschildComplex,
    KadeishviliReport,
    cochain_differential,
    hh_bar_oracle,
    hh_dim,
    kadeishvili_check,
)
from .koszul import (
    KoszulBasis,
    KoszulReport,
    admissible_in_generic_span,
    admissible_sequences,
    count_admissible,
    is_admissible,
    koszul_space_generic,
    verify_koszul,
)
from .massey import (
    CohomologyClass,
    DefiningSystem,
    DgAlgebra,
    DgMap,
    StrongMasseyReport,
    dg_algebra_from_dict,
    dg_algebra_to_dict,
    extend_with_acyclic_pairs,
    from_connected_sum,
    lift_coboundary,
    lift_cocycle,
    lift_defining_system,
    massey_product,
    massey_product_set,
    strong_massey_check,
    trivial_defining_system,
)

__version__ = "0.1.0"

__all__ = [
    "BarFactor",
    "BarReport",
    "BitMatrix",
    "BitVector",
    "BooleanRing",
    "CapExceeded",
    "Cochain",
    "CohomologyClass",
    "ConnectedSumAlgebra",
    "DefiningSystem",
    "DgAlgebra",
    "DgMap",
    "GradedElement",
    "HeadTail",
    "HhReport",
    "HochschildComplex",
    "InvalidDefiningSystemError",
    "KadeishviliReport",
    "KoszulBasis",
    "KoszulReport",
    "NotACocycleError",
    "Orbit",
    "StrongMasseyReport",
    "Subring",
    "adjoin",
    "admissible_in_generic_span",
    "admissible_sequences",
    "boolean_ring",
    "bottom_cocycles",
    "cochain_differential",
    "connected_sum_algebra",
    "count_admissible",
    "default_cap",
    "dg_algebra_from_dict",
    "dg_algebra_to_dict",
    "drop_first",
    "drop_last",
    "extend_cocycle",
    "extend_cocycle_split",
    "extend_with_acyclic_pairs",
    "from_connected_sum",
    "graded_multiply",
    "head_tail",
    "hh_bar_oracle",
    "hh_dim",
    "ideal_decompose",
    "ideal_membership",
    "is_admissible",
    "is_stable",
    "kadeishvili_check",
    "kernel_basis",
    "koszul_space_generic",
    "lift_coboundary",
    "lift_cocycle",
    "lift_defining_system",
    "massey_product",
    "massey_product_set",
    "orbit_decomposition",
    "rank",
    "restrict_cochain",
    "rotate_back",
    "rotate_forward",
    "solve",
    "solve_coboundary",
    "echelon_rank",
    "sparse_rank",
    "strong_massey_check",
    "trivial_defining_system",
    "verify_koszul",
]
