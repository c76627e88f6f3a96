"""Multiconsensus analysis for signed directed influence networks.

The package answers three questions about a signed, weighted digraph of
stubborn and open-minded agents: which agents are topologically persuasive,
which opinion clusters must therefore form under the stubborn-anchored signed
update, and does the prediction survive both direct steady-state solution and
iterative simulation under arbitrary reweighting.
"""

from .errors import (
    ConditionsNotMet,
    GraphFormatError,
    GraphValidationError,
    HypothesisViolated,
    InfeasibleParameters,
    NoStubbornAgents,
    NotConverged,
    PowerIterationStalled,
    SFJError,
    SingularBlock,
    SingularSystem,
    SizeLimit,
    UnreachableNodes,
)
from .graph import (
    Edge,
    NormalizedSystem,
    ReachabilityReport,
    SignedDigraph,
    abs_matrix,
    check_reachability,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    normalize,
    save_graph,
)
from .ltp import (
    ClusterPrediction,
    DominatorTree,
    LTPCertificate,
    Violation,
    analyze,
    brute_force_ltp_oracle,
    build_dominator_tree,
    certificate_to_dict,
    check_conditions,
    detect_ltp_agents,
    predict_clusters,
)
from .dynamics import (
    OpinionTrace,
    ReducedRowRelation,
    SteadyStateSystem,
    build_steady_state,
    influence_matrix,
    neumann_influence,
    neumann_tail_bound,
    neumann_terms_for,
    reduce_steady_state,
    schur_complement,
    sfj_step,
    simulate,
    spectral_radius,
    write_matrix_csv,
    write_trace_csv,
)
from .verification import (
    ClusterReport,
    RobustnessReport,
    cluster_report,
    cluster_spread,
    clusters_from_influence,
    clusters_from_trace,
    refines,
    robustness_harness,
)
from .generator import random_multiconsensus_graph
from . import networks

__version__ = "0.1.0"

__all__ = [
    "ClusterPrediction",
    "ClusterReport",
    "ConditionsNotMet",
    "DominatorTree",
    "Edge",
    "GraphFormatError",
    "GraphValidationError",
    "HypothesisViolated",
    "InfeasibleParameters",
    "LTPCertificate",
    "NormalizedSystem",
    "NoStubbornAgents",
    "NotConverged",
    "OpinionTrace",
    "PowerIterationStalled",
    "ReachabilityReport",
    "ReducedRowRelation",
    "RobustnessReport",
    "SFJError",
    "SignedDigraph",
    "SingularBlock",
    "SingularSystem",
    "SizeLimit",
    "SteadyStateSystem",
    "UnreachableNodes",
    "Violation",
    "abs_matrix",
    "analyze",
    "brute_force_ltp_oracle",
    "build_dominator_tree",
    "build_steady_state",
    "certificate_to_dict",
    "check_conditions",
    "check_reachability",
    "cluster_report",
    "cluster_spread",
    "clusters_from_influence",
    "clusters_from_trace",
    "detect_ltp_agents",
    "graph_from_dict",
    "graph_to_dict",
    "influence_matrix",
    "load_graph",
    "networks",
    "neumann_influence",
    "neumann_tail_bound",
    "neumann_terms_for",
    "normalize",
    "predict_clusters",
    "random_multiconsensus_graph",
    "reduce_steady_state",
    "refines",
    "robustness_harness",
    "save_graph",
    "schur_complement",
    "sfj_step",
    "simulate",
    "spectral_radius",
    "write_matrix_csv",
    "write_trace_csv",
]
