"""Library for 1-Sperner hypergraphs: recognition, gluing decomposition,
threshold and equalizing weight synthesis, exact oracles, and the matching
threshold-graph characterizations."""

from .core import (
    Graph,
    Hypergraph,
    IncidenceMatrix,
    VertexClasses,
    VertexId,
    complement,
    incidence_matrix,
    is_conformal,
    is_dually_sperner,
    is_one_sperner,
    is_sperner,
    k_of,
    make_graph,
    make_hypergraph,
    permutation_equivalent,
    vertex_classes,
)
from .decomp import (
    DecompositionTree,
    Leaf,
    Node,
    UniformCore,
    decompose_fully,
    find_decomposition_vertex,
    format_tree,
    glue,
    is_safe,
    is_z_decomposable,
    parse_tree,
    rebuild,
    split_at,
    uniform_core,
)
from .formats import format_gr, format_hg, iter_hg_documents, parse_gr, parse_hg
from .gen import antistar, extremal_family, random_one_sperner, star
from .graphs import (
    SplitOrdering,
    ThresholdEquivalenceReport,
    clique_hypergraph,
    complement_graph,
    is_threshold_graph_forbidden,
    is_threshold_graph_ordering,
    maximal_cliques,
    stable_set_hypergraph,
    threshold_equivalence_report,
)
from .oracle import (
    AsummabilityWitness,
    Constraint,
    ThresholdCertificate,
    ThresholdRefusal,
    enumerate_sperner,
    is_independent,
    is_k_asummable,
    is_threshold,
    maximal_independent_sets,
)
from .weights import (
    RationalVector,
    WeightAssignment,
    char_rank,
    equalizing_violation,
    equalizing_weights,
    normalized_vector,
    threshold_property_violation,
    threshold_separator,
    verify_equalizing,
    verify_threshold_separator,
)

__version__ = "0.1.0"

__all__ = [
    "AsummabilityWitness",
    "Constraint",
    "DecompositionTree",
    "Graph",
    "Hypergraph",
    "IncidenceMatrix",
    "Leaf",
    "Node",
    "RationalVector",
    "SplitOrdering",
    "ThresholdCertificate",
    "ThresholdEquivalenceReport",
    "ThresholdRefusal",
    "UniformCore",
    "VertexClasses",
    "VertexId",
    "WeightAssignment",
    "antistar",
    "char_rank",
    "clique_hypergraph",
    "complement",
    "complement_graph",
    "decompose_fully",
    "enumerate_sperner",
    "equalizing_violation",
    "equalizing_weights",
    "extremal_family",
    "find_decomposition_vertex",
    "format_gr",
    "format_hg",
    "format_tree",
    "glue",
    "incidence_matrix",
    "is_conformal",
    "is_dually_sperner",
    "is_independent",
    "is_k_asummable",
    "is_one_sperner",
    "is_safe",
    "is_sperner",
    "is_threshold",
    "is_threshold_graph_forbidden",
    "is_threshold_graph_ordering",
    "is_z_decomposable",
    "iter_hg_documents",
    "k_of",
    "make_graph",
    "make_hypergraph",
    "maximal_cliques",
    "maximal_independent_sets",
    "normalized_vector",
    "parse_gr",
    "parse_hg",
    "parse_tree",
    "permutation_equivalent",
    "random_one_sperner",
    "rebuild",
    "split_at",
    "stable_set_hypergraph",
    "star",
    "threshold_equivalence_report",
    "threshold_property_violation",
    "threshold_separator",
    "uniform_core",
    "verify_equalizing",
    "verify_threshold_separator",
    "vertex_classes",
]
