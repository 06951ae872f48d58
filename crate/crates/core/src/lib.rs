//! Matching theory for cubic multigraphs: perfect matchings, barriers,
//! λ-matchable vertices and pairs, tight-cut and 2-cut decompositions, the
//! families attaining the lower bounds, and checkers for those bounds.

pub mod barrier;
pub mod canon;
pub mod connectivity;
pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod io;
pub mod lambda;
pub mod matching;
pub mod verify;

pub use barrier::{find_barrier_containing, find_nontrivial_barrier, Barrier};
pub use canon::{are_isomorphic, canonical_form, canonical_hash, CanonicalForm};
pub use connectivity::{edge_connectivity, enumerate_small_cuts, vertex_connectivity};
pub use decomposition::{
    barrier_decomposition, bricks_and_braces, contract, invariants, is_tight_cut,
    tight_cut_decomposition, two_cut_decomposition, BarrierDecomposition, Contraction,
    DecompositionTree, InvariantBundle,
};
pub use error::{Error, Result};
pub use graph::{Bipartition, Cut, EdgeId, Multigraph, Subgraph};
pub use io::{parse_edge_list, parse_graph6, serialize_edge_list, to_graph6};
pub use lambda::{
    find_ab_matching, find_v_matching, is_lambda_matchable_pair, is_lambda_matchable_vertex,
    lambda_profile, partner_count, Engine, LambdaProfile,
};
pub use matching::{
    count_perfect_matchings, enumerate_perfect_matchings, find_perfect_matching,
    has_perfect_matching, is_bicritical, is_matchable_pair, is_matching_covered,
    MatchingCertificate, MatchingKind,
};
pub use verify::{run_corpus, Corpus, TheoremRecord, VerificationReport};
