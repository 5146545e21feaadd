"""Equiangular line sets over exact rational Gram arithmetic.

Submodules: linalg (exact matrices), lineset (Gram-based line sets,
validation, bounds), constructions (named families, graph6 ingestion),
saturation (candidate enumeration and the d + omega bound), spansearch
(seeded randomized rank reduction), maxclique (exact clique solver),
graph6 (codec), cli (command-line front end).
"""

from .errors import (
    ConstructionMismatch,
    EmptyResult,
    EqlinesError,
    HypothesisViolated,
    MalformedGraph6,
    NotABasis,
    NotPSD,
    NotSymmetric,
    OutOfRange,
    RankDeficient,
    SingularMatrix,
)
from .linalg import RatMatrix, Rational, format_rational, parse_rational
from .lineset import (
    BoundsEntry,
    CheckResult,
    LineSet,
    SignMatrix,
    ValidationReport,
    from_sign_matrix,
    known_bounds,
    relative_bound,
    relative_bound_floor,
    validate,
)
from .constructions import (
    OctadDesign,
    TremainColumn,
    asche_72,
    filter_orthogonal,
    from_graph6,
    g_vector,
    generate_octads,
    srg_check,
    taylor_90,
    tremain_28,
)
from .maxclique import CliqueResult, SimpleGraph, greedy_coloring_bound, max_clique
from .saturation import (
    Candidate,
    SaturationReport,
    build_compatibility_graph,
    check_saturated,
    enumerate_candidates,
    select_basis,
)
from .spansearch import (
    SearchRun,
    SearchSummary,
    SplitMix64,
    extract_sublineset,
    orthogonal_complement,
    random_search,
    span_closure,
)

__version__ = "1.0.0"

__all__ = [
    "BoundsEntry",
    "Candidate",
    "CheckResult",
    "CliqueResult",
    "ConstructionMismatch",
    "EmptyResult",
    "EqlinesError",
    "HypothesisViolated",
    "LineSet",
    "MalformedGraph6",
    "NotABasis",
    "NotPSD",
    "NotSymmetric",
    "OctadDesign",
    "OutOfRange",
    "RankDeficient",
    "RatMatrix",
    "Rational",
    "SaturationReport",
    "SearchRun",
    "SearchSummary",
    "SignMatrix",
    "SimpleGraph",
    "SingularMatrix",
    "SplitMix64",
    "TremainColumn",
    "ValidationReport",
    "asche_72",
    "build_compatibility_graph",
    "check_saturated",
    "enumerate_candidates",
    "extract_sublineset",
    "filter_orthogonal",
    "format_rational",
    "from_graph6",
    "from_sign_matrix",
    "g_vector",
    "generate_octads",
    "greedy_coloring_bound",
    "known_bounds",
    "max_clique",
    "orthogonal_complement",
    "parse_rational",
    "random_search",
    "relative_bound",
    "relative_bound_floor",
    "select_basis",
    "span_closure",
    "srg_check",
    "taylor_90",
    "tremain_28",
    "validate",
]
