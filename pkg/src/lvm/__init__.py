"""Latent viral marketing: simulator and seeding-strategy benchmarks.

Simulates seeding campaigns over social networks where infected ("latent")
customers influence their neighbors' acceptance probability without
spreading the product on their own, and compares seven seed-selection
policies, including the recursive social-score heuristic, under known and
estimated acceptance parameters.
"""

from .diffusion import (DiffusionState, NodeParams, NodeState, advance_period,
                        infection_probability, infectious_neighbor_count, init_states,
                        pre_seed, record_attempt)
from .engine import (AttemptRecord, ParamSpec, SimConfig, SimTrace, Termination,
                     ViewSpec, cumulative_success_curve, mean_seeded_centrality,
                     run_simulation)
from .graph import (CentralityVector, EdgeListParseError, Graph, GraphStats, build_graph,
                    eigenvector_centrality, graph_stats, parse_edge_list, sample_induced)
from .harness import (AggregateRow, RunSummary, SweepSpec, aggregate, load_network,
                      read_aggregate_csv, relative_improvement, run_replications,
                      run_sweep, write_aggregate_csv, write_attempts_csv)
from .strategies import (ParamView, SeederKind, Selection, ViewMode,
                         brute_force_expected_value, candidate_set, draw_estimates,
                         score_candidates, select, social_score)

__version__ = "0.1.0"

__all__ = [
    "AggregateRow", "AttemptRecord", "CentralityVector", "DiffusionState",
    "EdgeListParseError", "Graph", "GraphStats", "NodeParams", "NodeState", "ParamSpec",
    "ParamView", "RunSummary", "SeederKind", "Selection", "SimConfig", "SimTrace",
    "SweepSpec", "Termination", "ViewMode", "ViewSpec", "advance_period", "aggregate",
    "brute_force_expected_value", "build_graph", "candidate_set",
    "cumulative_success_curve", "draw_estimates", "eigenvector_centrality", "graph_stats",
    "infection_probability", "infectious_neighbor_count", "init_states", "load_network",
    "mean_seeded_centrality", "parse_edge_list", "pre_seed", "read_aggregate_csv",
    "record_attempt", "relative_improvement", "run_replications", "run_simulation",
    "run_sweep", "sample_induced", "score_candidates", "select", "social_score",
    "write_aggregate_csv", "write_attempts_csv",
]
