from ._core import (
    BipartiteGraph,
    CapExceeded,
    Graph,
    InvalidQuery,
    __version__,
    degeneracy,
    densest_subgraph,
    find_k_special_paths,
    four_point_delta,
    hyperbolicity_report,
    low_tw_coloring,
    project,
    sample_bipartite,
    sample_scaled,
    sparsity_report,
    verify_coloring,
)

__all__ = [
    "BipartiteGraph",
    "CapExceeded",
    "Graph",
    "InvalidQuery",
    "__version__",
    "degeneracy",
    "densest_subgraph",
    "find_k_special_paths",
    "four_point_delta",
    "hyperbolicity_report",
    "low_tw_coloring",
    "project",
    "sample_bipartite",
    "sample_scaled",
    "sparsity_report",
    "verify_coloring",
]
