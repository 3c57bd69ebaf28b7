//! Competition graphs of digraphs, specialized to bipartite tournaments.
//!
//! The crate computes m-step competition graphs by two independent routes
//! (Boolean matrix powers and direct walk enumeration), runs the sink
//! elimination recursion, detects the index and period at which the
//! competition graph sequence stabilizes, and verifies the structural
//! behavior of bipartite tournaments through a registry of named checks.

pub mod checks;
pub mod classify;
pub mod competition;
pub mod digraph;
pub mod dot;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod json;
pub mod matrix;
pub mod predict;
pub mod sink;
pub mod walks;

pub use checks::{
    check_names, checks_by_name, default_m_max, registry, verify_instance, verify_instance_with,
    Applies, CheckResult, CheckStatus, TheoremCheck, VerificationReport, VerifyContext,
};
pub use classify::{classify_structure, StructureSummary};
pub use competition::{
    competition_graph, competition_graph_sequence, competition_profile, default_safety_cap,
    m_step_competition_graph, m_step_competition_graph_oracle, row_graph, CompetitionProfile,
    ProfileError,
};
pub use digraph::{
    validate_bipartite_tournament, BipartiteError, BipartiteTournament, Digraph, DigraphError,
    LoopDigraph, Part,
};
pub use generate::{
    enumerate_all, generate, random_acyclic_bipartite_tournament, random_bipartite_tournament,
    random_digraph, random_sinkless_bipartite_tournament, tournament_from_mask, GenError, GenMode,
    GenSpec, SplitMix64, DEFAULT_SINKLESS_RETRIES, ENUMERATION_CAP,
};
pub use graph::Graph;
pub use matrix::{adjacency_matrix, matrix_power, power_digraph, BooleanMatrix};
pub use predict::{
    acyclic_cindex, check_shape, predict_acyclic, predict_cyclic,
    satisfies_sink_free_union, satisfies_two_clique_disjunction, Applicability, PartShape,
    PredictError, Prediction, ShapeClaim, ValueClaim,
};
pub use sink::{
    check_parity_partition, is_acyclic_via_sinks, max_walk_length_from, sink_analysis, sinks,
    ParityError, ParityReport, SinkAnalysis, SinkError,
};
pub use walks::{has_directed_cycle, m_step_prey_set};
