from ._core import (
    ConditionViolation,
    DegeneracyResult,
    Graph,
    InstanceTooLarge,
    PreconditionViolation,
    Rational,
    RatioOutOfRange,
    SparsityParams,
    TheoremViolation,
    VerifyReport,
    build_params,
    check_membership,
    degeneracy_order,
    equitable_color,
    format_edge_list,
    gen_d_degenerate,
    gen_gnp,
    gen_named,
    kplanar_params,
    kplanar_threshold,
    load_graph,
    max_bipartite_subgraph_density,
    max_subgraph_density,
    max_subgraph_density_exhaustive,
    oracle_equitable,
    parse_edge_list,
    solve_beta,
    verify_coloring,
)

__all__ = [
    "ConditionViolation",
    "DegeneracyResult",
    "Graph",
    "InstanceTooLarge",
    "PreconditionViolation",
    "Rational",
    "RatioOutOfRange",
    "SparsityParams",
    "TheoremViolation",
    "VerifyReport",
    "build_params",
    "check_membership",
    "degeneracy_order",
    "equitable_color",
    "format_edge_list",
    "gen_d_degenerate",
    "gen_gnp",
    "gen_named",
    "kplanar_params",
    "kplanar_threshold",
    "load_graph",
    "max_bipartite_subgraph_density",
    "max_subgraph_density",
    "max_subgraph_density_exhaustive",
    "oracle_equitable",
    "parse_edge_list",
    "solve_beta",
    "verify_coloring",
]
