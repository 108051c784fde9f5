"""Banner simplicial-complex analysis.

Simplicial complexes with banner/flag testing, exact field homology,
Cohen-Macaulay and Buchsbaum connectivity sweeps, rev-lex compression, and
balanced-complex synthesis, plus a CLI harness that re-verifies the
library's structural claims on a pinned catalog of instances.
"""

from ._kernel import USING_COMPILED, kernel_name
from .balanced import (
    ABalanceSpec,
    ColoredComplex,
    PermissibleFamily,
    SynthesisInvariantError,
    balanced_companion,
    colorable_companion,
    compressed_complex,
    ffk_feasible,
    find_coloring,
    is_a_balanced,
    is_balanced,
    multipartite_graph,
    permissible_family,
    revlex_precedes,
    turan_bound_holds,
    turan_count,
    turan_recursion_holds,
    validate_coloring,
)
from .banner import (
    BannerReport,
    BInvariants,
    b_invariants,
    banner_index,
    banner_violations,
    cliques,
    is_flag,
    is_i_banner,
)
from .cm import (
    CMReport,
    QReport,
    alexander_duality_holds,
    deletion_connected,
    is_buchsbaum,
    is_cm,
    is_homology_manifold,
    is_homology_sphere,
    is_q_buchsbaum,
    is_q_cm,
)
from .complexes import (
    Face,
    SimplicialComplex,
    from_facets,
    is_connected,
    join,
    missing_faces,
    suspension,
)
from .generators import generate
from .homology import (
    DEFAULT_FIELDS,
    GF2,
    GF3,
    RATIONALS,
    BettiVector,
    FieldSpec,
    betti_number,
    boundary_rank,
    euler_characteristic,
    reduced_betti,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
