"""Exact cohomology tables for projections of degree-d embeddings of P^n.

Thin re-export of the compiled extension; see the project README for the
spec-file schema and the CLI.
"""

from verocohom._core import (  # noqa: F401
    BudgetExceededError,
    DegenerateMapError,
    InconsistentSpecError,
    InternalInconsistencyError,
    MapSpec,
    SpecParseError,
    __version__,
    branch_report,
    cohom_table,
    dim_partials,
    dim_partials_preimage,
    fast_dim_partials,
    fast_dim_partials_preimage,
    graph_distance,
    h1_normal,
    h1_tangent,
    repcheck,
    smoothness_violations,
    spec_from_json,
)

__all__ = [
    "BudgetExceededError",
    "DegenerateMapError",
    "InconsistentSpecError",
    "InternalInconsistencyError",
    "MapSpec",
    "SpecParseError",
    "__version__",
    "branch_report",
    "cohom_table",
    "dim_partials",
    "dim_partials_preimage",
    "fast_dim_partials",
    "fast_dim_partials_preimage",
    "graph_distance",
    "h1_normal",
    "h1_tangent",
    "repcheck",
    "smoothness_violations",
    "spec_from_json",
]
