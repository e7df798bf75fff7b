"""gemtk: analysis and search for graph-encoded manifolds.

A gem is a (d+1)-regular properly edge-colored loopless multigraph whose
induced simplicial cell complex triangulates a closed d-manifold.  This
package validates such graphs, enumerates the semi-equivelar face-size
sequences admissible on a surface of given Euler characteristic, traces
regular embeddings, computes integer homology of the induced complex, checks
the surface/3-manifold/residue criteria, and searches exhaustively for small
gems realizing a prescribed type.
"""

from .census import (
    TypeSequence,
    TypeSolution,
    canonical_cycle,
    enumerate_types,
    normalize,
    solve_vertex_count,
)
from .complexes import (
    Cell,
    CellComplex,
    HomologyProfile,
    ResidueSphereReport,
    SurfaceDescriptor,
    ThreeManifoldReport,
    build_complex,
    check_3manifold,
    check_residues_sphere,
    check_surface,
    free_profile,
    graph_homology,
    homology,
    smith_normal_form,
    sphere_profile,
)
from .embeddings import (
    CyclicOrder,
    EmbeddingReport,
    FaceTrace,
    SeType,
    all_embeddings,
    embedding_report,
    semi_equivelar_type,
    trace_faces,
)
from .gemio import GemParseError, parse_gem, write_gem
from .graphs import (
    ColoredGraph,
    GemValidationError,
    GraphDefect,
    ResidueStats,
    canonical_code,
    canonical_form,
    connected_components,
    is_bipartite,
    is_connected,
    permute_colors,
    relabel,
    residue_components,
    residue_stats,
    residue_subgraph,
    validate,
    validation_defects,
)
from .search import (
    InfeasibleSpecError,
    SearchBudgetExceeded,
    SearchOutcome,
    SearchSpec,
    SearchStats,
    count_nonisomorphic,
    search_gems,
)

__all__ = [
    "Cell",
    "CellComplex",
    "ColoredGraph",
    "CyclicOrder",
    "EmbeddingReport",
    "FaceTrace",
    "GemParseError",
    "GemValidationError",
    "GraphDefect",
    "HomologyProfile",
    "InfeasibleSpecError",
    "ResidueSphereReport",
    "ResidueStats",
    "SeType",
    "SearchBudgetExceeded",
    "SearchOutcome",
    "SearchSpec",
    "SearchStats",
    "SurfaceDescriptor",
    "ThreeManifoldReport",
    "TypeSequence",
    "TypeSolution",
    "all_embeddings",
    "build_complex",
    "canonical_code",
    "canonical_cycle",
    "canonical_form",
    "check_3manifold",
    "check_residues_sphere",
    "check_surface",
    "connected_components",
    "count_nonisomorphic",
    "enumerate_types",
    "embedding_report",
    "free_profile",
    "graph_homology",
    "homology",
    "is_bipartite",
    "is_connected",
    "normalize",
    "parse_gem",
    "permute_colors",
    "relabel",
    "residue_components",
    "residue_stats",
    "residue_subgraph",
    "search_gems",
    "semi_equivelar_type",
    "smith_normal_form",
    "solve_vertex_count",
    "sphere_profile",
    "trace_faces",
    "validate",
    "validation_defects",
    "write_gem",
]

__version__ = "0.1.0"
