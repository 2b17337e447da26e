"""Maximum cliques, k-core bounds, and temporal strong components.

Quick tour::

    from pathlib import Path
    import cliquetools as ct

    g = ct.largest_component(ct.build_graph(ct.parse_edge_list(Path("g.txt"))))
    print(ct.stats(g, with_clique=True))
    print(ct.max_clique_exact(g, threads=4))

    tg = ct.parse_temporal_edge_list(Path("contacts.txt"))
    print(ct.max_tscc(tg).size)

Hot kernels are jitted with numba when available; set
``CLIQUETOOLS_BACKEND=numpy`` to force the pure-numpy fallback.
"""

from ._kernels import backend_name, warm_up
from .clique import (
    CliqueResult,
    SearchBounds,
    SharedBest,
    max_clique_exact,
    max_clique_heuristic,
    verify_clique,
)
from .graph import (
    EdgeList,
    Graph,
    ParseError,
    build_graph,
    degree,
    largest_component,
    parse_edge_list,
)
from .metrics import (
    CliqueBounds,
    CoreDecomposition,
    GraphStats,
    TriangleCounts,
    clique_bounds,
    clustering,
    core_decomposition,
    kcore_recall,
    stats,
    triangle_counts,
)
from .temporal import (
    ReachabilityGraph,
    TemporalEdge,
    TemporalGraph,
    TsccResult,
    max_tscc,
    parse_temporal_edge_list,
    reach,
    strong_reachability,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeList",
    "Graph",
    "ParseError",
    "parse_edge_list",
    "build_graph",
    "largest_component",
    "degree",
    "TriangleCounts",
    "CoreDecomposition",
    "CliqueBounds",
    "GraphStats",
    "triangle_counts",
    "clustering",
    "core_decomposition",
    "clique_bounds",
    "kcore_recall",
    "stats",
    "CliqueResult",
    "SearchBounds",
    "SharedBest",
    "max_clique_exact",
    "max_clique_heuristic",
    "verify_clique",
    "TemporalEdge",
    "TemporalGraph",
    "ReachabilityGraph",
    "TsccResult",
    "parse_temporal_edge_list",
    "reach",
    "strong_reachability",
    "max_tscc",
    "backend_name",
    "warm_up",
    "__version__",
]
