"""Recognition, verification and construction of NIC-planar graphs.

NIC-planar graphs admit drawings with at most one crossing per edge in
which any two crossing pairs share at most one vertex.  The package
provides the embedding data model and its verifiers, the generalized
dual with its adjacency rules and weight accounting, generators for the
extremal families, a recognizer for the optimal (densest) graphs, and a
brute-force oracle for cross-checking on small inputs.
"""

from __future__ import annotations

from .dual import (
    DualLink,
    DualNode,
    FlipSite,
    GeneralizedDual,
    LevelMap,
    QuarterSphere,
    SphereAccount,
    build_dual,
    check_adjacency_rules,
    check_dual_structure,
    compute_levels,
    find_flips,
    is_kite_triangle_bipartite,
    kite_flip,
    quarter_sphere_accounting,
)
from .embedding import (
    CrossingEntry,
    CrossingRegistry,
    Face,
    NicEmbedding,
    VerificationReport,
    Violation,
    embed_with_crossings,
    embedding_from_json,
    embedding_to_json,
    planar_reduction,
    planar_skeleton,
    trace_faces,
    verify_maximal_embedding,
    verify_nic,
)
from .errors import (
    AccountingViolation,
    DuplicateEdge,
    GraphError,
    InvalidParameters,
    KTooSmall,
    LevelExceedsTwo,
    LimitExceeded,
    LoopEdge,
    NicplanarError,
    NonSphericalEmbedding,
    NotMaximalEmbedding,
    ParseError,
    PreconditionViolated,
    TooSmall,
    VertexOutOfRange,
)
from .generate import (
    GeneratedInstance,
    gen_densest_intermediate,
    gen_nested_k5,
    gen_optimal,
    gen_rac_counterexample,
    gen_sparsest,
    nested_k5_variant_count,
    np_gadget_embedding,
    np_gadget_transform,
)
from .graph import (
    Graph,
    is_biconnected,
    is_connected,
    is_triconnected,
    new_graph,
    parse_graph,
    serialize_graph,
)
from .k4 import K4Catalog, bucket_by_edge, list_k4
from .oracle import OracleResult, brute_k4_catalog, oracle_maximal_nic
from .planarity import PlanarityResult, test_planarity
from .recognize import (
    ARBORICITY_TIMEOUT,
    EDGE_COUNT_MISMATCH,
    KITE_COVER_VIOLATION,
    NONPLANAR_STAR_GRAPH,
    STRUCTURALLY_INVALID,
    KiteSet,
    RecognitionResult,
    build_star_graph,
    recognize_optimal,
    reinsert_kites,
)

__version__ = "0.1.0"

__all__ = [
    "ARBORICITY_TIMEOUT",
    "EDGE_COUNT_MISMATCH",
    "KITE_COVER_VIOLATION",
    "NONPLANAR_STAR_GRAPH",
    "STRUCTURALLY_INVALID",
    "AccountingViolation",
    "CrossingEntry",
    "CrossingRegistry",
    "DualLink",
    "DualNode",
    "DuplicateEdge",
    "Face",
    "FlipSite",
    "GeneralizedDual",
    "GeneratedInstance",
    "Graph",
    "GraphError",
    "InvalidParameters",
    "K4Catalog",
    "KTooSmall",
    "KiteSet",
    "LevelExceedsTwo",
    "LevelMap",
    "LimitExceeded",
    "LoopEdge",
    "NicEmbedding",
    "NicplanarError",
    "NonSphericalEmbedding",
    "NotMaximalEmbedding",
    "OracleResult",
    "ParseError",
    "PlanarityResult",
    "PreconditionViolated",
    "QuarterSphere",
    "RecognitionResult",
    "SphereAccount",
    "TooSmall",
    "VerificationReport",
    "VertexOutOfRange",
    "Violation",
    "brute_k4_catalog",
    "bucket_by_edge",
    "build_dual",
    "build_star_graph",
    "check_adjacency_rules",
    "check_dual_structure",
    "compute_levels",
    "embed_with_crossings",
    "embedding_from_json",
    "embedding_to_json",
    "find_flips",
    "gen_densest_intermediate",
    "gen_nested_k5",
    "gen_optimal",
    "gen_rac_counterexample",
    "gen_sparsest",
    "is_biconnected",
    "is_connected",
    "is_kite_triangle_bipartite",
    "is_triconnected",
    "kite_flip",
    "list_k4",
    "nested_k5_variant_count",
    "new_graph",
    "np_gadget_embedding",
    "np_gadget_transform",
    "oracle_maximal_nic",
    "parse_graph",
    "planar_reduction",
    "planar_skeleton",
    "quarter_sphere_accounting",
    "recognize_optimal",
    "reinsert_kites",
    "serialize_graph",
    "test_planarity",
    "trace_faces",
    "verify_maximal_embedding",
    "verify_nic",
]
