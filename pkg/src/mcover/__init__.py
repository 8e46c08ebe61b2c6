"""Exact covers of a graph's edge set by matchings of fixed size."""

from .graph import (
    CaterpillarSpec,
    Graph,
    GraphError,
    ParseError,
    build_caterpillar,
    canonical_tree_code,
    graph_stats,
    k6_with_pendants,
    load_graph,
    path_graph,
    petersen_graph,
    serialize,
    star_graph,
)
from .matchings import enumerate_matchings, extends_to, is_m_coverable, min_maximal_matching_size
from .coloring import ColorClasses, balance_matchings, chromatic_index, equalized_coloring
from .splitting import SplittingCertificate, is_splitting_set, splitting_number, tree_splitting_prune
from .excessive import (
    INFINITE,
    CoverCertificate,
    IndexResult,
    exact_excessive_index,
    formula_index_small_m,
    is_compatible,
    lower_bound,
    tree_index_m4,
)

__version__ = "0.1.0"
